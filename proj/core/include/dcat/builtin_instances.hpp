#ifndef DCAT_BUILTIN_INSTANCES_HPP
#define DCAT_BUILTIN_INSTANCES_HPP

#include <string>
#include <vector>

#include "dcat/double_module.hpp"

namespace dcat {

// Named instances shipped with the library and exposed by the CLI:
//
//   c4          P = C4, M = H = V = {0, 2}, inclusions, conjugation (trivial)
//   s3_a3       P = H = V = S3, M = A3, inclusions, conjugation
//   s3_shell    commuting shells over S3 (M has identities only)
//   d4_center   P = H = D4, V = <r>, M = center {e, r^2}, conjugation
//   semicore_s3 semicore data A3 in S3 = P with phi = id
//   broken_action  s3_a3 with the V-action made trivial; fails the first
//                  module law and breaks interchange, on purpose
std::vector<std::string> builtin_instance_names();

DoubleModule builtin_instance(const std::string& name);  // throws Error

}  // namespace dcat

#endif  // DCAT_BUILTIN_INSTANCES_HPP
