#pragma once

// JSON encodings shared by the command-line tool and the acceptance suite.
//
//   matrix: {"rows": m, "cols": n, "data": [[re, im], ...]}  (row-major)
//   pair:   {"T1": matrix, "T2": matrix, "q": [re, im]}
//           optionally "A": matrix for intertwining data

#include <string>

#include <json.hpp>

#include "qlift/qlift.hpp"

namespace qlift::cli {

using Json = nlohmann::ordered_json;

Json to_json(const MatrixOp& m);
MatrixOp matrix_from_json(const Json& j);

Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json pair_to_json(const QPair& p);
QPair pair_from_json(const Json& j);

Json to_json(const Tolerances& t);
Json to_json(const Certificate& c);

/// Parses "re,im" or "r@degrees". Throws InvalidArgument.
Complex parse_q(const std::string& text);

/// "-" reads stdin / writes stdout.
std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

/// Serialization used for every report: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace qlift::cli
