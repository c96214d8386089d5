#pragma once

// Command-line front end and its on-disk family format.
//
// A family file is JSON with one vector per line:
//
//   {
//     "field": "real",
//     "dim": 2,
//     "metadata": {"truncation": 64, "source": "..."},
//     "families": {
//       "F": [
//         [1, 2],
//         [1.1428571428571428, 4]
//       ]
//     }
//   }
//
// Complex entries are [re, im] pairs. Any number may instead be written as a
// string, which is read with strtod; the hex-float writer uses this to store
// exact binary values ("0x1.2492492492492p+0").

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "biframe/biframes.hpp"
#include "biframe/frames.hpp"
#include "biframe/linalg.hpp"

namespace biframe::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPairFrameOnly = 1,
  kNeither = 2,
  kParseFailure = 3,
  kValidationFailure = 4,
  kNumericalFailure = 5,
};

int exit_code(Classification c);
int exit_code(ErrorKind kind);

/// Malformed input text. The message carries line and column.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FamilyFile {
  Field field = Field::Real;
  Index dim = 0;
  std::vector<std::pair<std::string, VectorFamily>> families;
  std::optional<Index> truncation;
  std::optional<std::string> source;

  /// Throws Error(InvalidArgument) naming the missing family.
  const VectorFamily& family(const std::string& name) const;
};

/// Throws ParseError for malformed JSON or a wrong shape, Error for broken
/// invariants (vector length, empty or duplicate families).
FamilyFile parse_family_file(const std::string& text);

std::string write_family_file(const FamilyFile& file, bool hex_floats = false);

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biframe::cli
