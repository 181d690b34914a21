#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "repvar/reps.hpp"

namespace repvar::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode { kOk = 0, kNegative = 1, kInputError = 2 };

// Parsed representation file.  Statements end with ';':
//   presentation <path>;        resolved relative to the file
//   field <N>;                  field order, overrides the command line
//   <gen> = [ e, e ; e, e ];    one matrix per generator, rows split by ';'
//   det <expr>;                 determinant target, default 1
//   # comment to end of line
struct RepFile {
  std::string presentation_path;
  long field_order = 0;  // 0 when absent
  std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> matrices;
  std::string det = "1";
};

RepFile parse_rep_file(const std::string& text);

// Loads the presentation (explicit path wins over the one named in the rep
// file) and builds the verified representation.
Representation load_rep(const std::string& rep_path, const std::string& presentation_path,
                        long default_field_order);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace repvar::cli
