#pragma once
#include <string>
#include <vector>

#include "scissors/report/report.hpp"

namespace scissors::report {

Report cmd_polytope_info(const std::string& path, const Options& opt);
Report cmd_compare(const std::string& a, const std::string& b, const Options& opt);
// errors: UnknownSuite
Report cmd_verify(const std::string& suite, const Options& opt);
// algebra: a registered name or a path to an algebra JSON file
Report cmd_hochschild(const std::string& algebra, const Options& opt);
// "Q[x,y]/(...)": Kähler differentials and the degree-1 HKR comparison
Report cmd_kahler(const std::string& presentation, const Options& opt);
Report cmd_homology_complex(const std::string& path, const Options& opt);
// group: "Z/m", "S3", "1" or a group JSON file (which may carry the action)
Report cmd_homology_group(const std::string& group, const std::string& module, const Options& opt);
Report cmd_phi(const std::string& tensor_path, const std::string& tower, const Options& opt);
// a certificate, a list of certificates, or a whole report
Report cmd_recheck(const std::string& path, const Options& opt);

}  // namespace scissors::report
