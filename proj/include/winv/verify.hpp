#pragma once

#include <string>
#include <vector>

namespace winv {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct VerifyConfig {
    std::string golden_dir = "golden";
    int p3_max_degree = 4;
    int cross_p2_max_degree = 6;
    int cross_twisted_max_degree = 5;
    int fiber_max_degree = 5;  // d1 + d2 bound for the fiber classes
};

// tables cross p3 fiber flip parity symmetry integrality memo determinism
const std::vector<std::string>& suite_names();

// "all" runs every suite in order; throws UsageError on an unknown name
std::vector<Check> run_suite(const std::string& name, const VerifyConfig& cfg);

// one table built in a fresh session and compared with <golden_dir>/Tnn.csv
Check check_table(int number, const std::string& golden_dir);

}  // namespace winv
