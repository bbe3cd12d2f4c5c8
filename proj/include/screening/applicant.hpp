#pragma once

#include "screening/model.hpp"

namespace screening {

/// One member of the applicant population; gamma is seen only by the human
/// decision-maker in stage one.
struct Applicant {
  Qualification q = Qualification::unqualified;
  double theta = 0.0;
  double gamma = 0.0;
};

}  // namespace screening
