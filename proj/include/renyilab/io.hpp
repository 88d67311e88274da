#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "renyilab/channels.hpp"
#include "renyilab/report.hpp"

namespace renyilab {

using Json = nlohmann::ordered_json;

/// Square matrices use {"dim", "re", "im"}; rectangular ones carry
/// {"rows", "cols"} instead of "dim". "im" may be omitted on input.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/// {"density": matrix, "normalized": bool}. A file claiming "normalized": true
/// must have unit trace.
Json state_to_json(const StateFunctional& rho);
StateFunctional state_from_json(const Json& j);

/// {"n", "m", "M": matrix} with M the n×m reshape matrix.
Json vector_to_json(const VectorState& xi);
VectorState vector_from_json(const Json& j);

enum class KrausConvention { Heisenberg, Schrodinger };

/// A channel read from file, remembering how its Kraus list was written.
struct ChannelFile {
  Channel channel;
  KrausConvention convention;
  bool converted;  // true when the stored operators are adjoints of the file's
};

/// {"kraus": [matrix, …], "convention": "heisenberg" | "schrodinger"}.
///
/// A Heisenberg list A_i means ℰ(a) = Σ A_i a A_i†, so it is stored as K_i = A_i†.
/// A Schrödinger list L_i means ρ ↦ Σ L_i ρ L_i† and is stored as is.
/// Output always uses the Heisenberg convention.
Json channel_to_json(const Channel& ch);
ChannelFile channel_from_json(const Json& j);

/// {"lhs", "rhs", "slack", "pass", "instance_seed"} plus "note" when set.
Json report_to_json(const Report& r);

/// Numbers with ±∞ written as the strings "inf" and "-inf".
Json number_to_json(double x);
double number_from_json(const Json& j);

/// Parses a file; syntax errors become ParseError with line and column.
Json read_json_file(const std::filesystem::path& path);
Json parse_json_text(const std::string& text, const std::string& origin = "<string>");

StateFunctional load_state(const std::filesystem::path& path);
VectorState load_vector(const std::filesystem::path& path);
ChannelFile load_channel(const std::filesystem::path& path);

}  // namespace renyilab
