#pragma once

#include <stdexcept>
#include <string>

namespace parachern {

// Error taxonomy, mirrored by the CLI exit codes:
//   ParseError -> 2, DataError -> 3, RankError -> 4, CheckError -> 5.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RankError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace parachern
