#include "support.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace testing {

std::string read_data(const std::string& name) {
    std::ifstream in(std::string(RELGB_TEST_DATA) + "/" + name);
    if (!in) throw std::runtime_error("missing test data " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace testing
