#pragma once

// Standard normal density, distribution and tail functions.
//
// The log-survival function stays finite far into the upper tail, where
// erfc underflows, by switching to the asymptotic Mills-ratio expansion.

namespace screening::normal {

double pdf(double z);
double log_pdf(double z);
double cdf(double z);
double survival(double z);
double log_survival(double z);
double log_cdf(double z);

}  // namespace screening::normal
