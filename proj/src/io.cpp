#include "renyilab/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace renyilab {

namespace {

using RealMatrix = Eigen::MatrixXd;

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) parse_fail(std::string("expected an object holding \"") + name + "\"");
  auto it = j.find(name);
  if (it == j.end()) parse_fail(std::string("missing field \"") + name + "\"");
  return *it;
}

Index index_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    parse_fail(std::string("\"") + name + "\" must be a positive integer");
  }
  return static_cast<Index>(v.get<long long>());
}

RealMatrix real_block(const Json& j, const char* name, Index rows, Index cols) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows) {
    std::ostringstream os;
    os << "\"" << name << "\" must have " << rows << " rows";
    parse_fail(os.str());
  }
  RealMatrix out(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      std::ostringstream os;
      os << "row " << i << " of \"" << name << "\" must have " << cols << " entries";
      parse_fail(os.str());
    }
    for (Index k = 0; k < cols; ++k) out(i, k) = number_from_json(row[static_cast<std::size_t>(k)]);
  }
  return out;
}

Json real_rows(const RealMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(number_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

template <class F>
auto with_context(const std::filesystem::path& path, F&& f) {
  const Json j = read_json_file(path);
  try {
    return f(j);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    parse_fail(path.string() + ": " + std::string(e.what()).substr(to_string(e.code()).size() + 2));
  }
}

}  // namespace

Json number_to_json(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return x;
}

double number_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return kInfinity;
    if (s == "-inf") return -kInfinity;
  }
  parse_fail("expected a number, got " + j.dump());
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json j;
  if (m.rows() == m.cols()) {
    j["dim"] = m.rows();
  } else {
    j["rows"] = m.rows();
    j["cols"] = m.cols();
  }
  j["re"] = real_rows(m.real());
  j["im"] = real_rows(m.imag());
  return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
  Index rows = 0, cols = 0;
  if (j.is_object() && j.contains("dim")) {
    rows = cols = index_field(j, "dim");
  } else {
    rows = index_field(j, "rows");
    cols = index_field(j, "cols");
  }
  const RealMatrix re = real_block(field(j, "re"), "re", rows, cols);
  const RealMatrix im = j.contains("im") ? real_block(j["im"], "im", rows, cols) : RealMatrix::Zero(rows, cols);
  ComplexMatrix out(rows, cols);
  out.real() = re;
  out.imag() = im;
  return out;
}

Json state_to_json(const StateFunctional& rho) {
  Json j;
  j["density"] = matrix_to_json(rho.matrix());
  j["normalized"] = rho.normalized();
  return j;
}

StateFunctional state_from_json(const Json& j) {
  const ComplexMatrix d = matrix_from_json(field(j, "density"));
  if (d.rows() != d.cols()) parse_fail("density must be square");
  StateFunctional rho{HermitianMatrix(d)};
  if (j.contains("normalized")) {
    if (!j["normalized"].is_boolean()) parse_fail("\"normalized\" must be a boolean");
    if (j["normalized"].get<bool>() && !rho.normalized()) {
      std::ostringstream os;
      os << "file claims unit trace but Tr D = " << rho.trace();
      throw Error(ErrorCode::NotNormalized, os.str());
    }
  }
  return rho;
}

Json vector_to_json(const VectorState& xi) {
  Json j;
  j["n"] = xi.left_dim();
  j["m"] = xi.right_dim();
  j["M"] = matrix_to_json(xi.reshape_matrix());
  return j;
}

VectorState vector_from_json(const Json& j) {
  const Index n = index_field(j, "n"), m = index_field(j, "m");
  ComplexMatrix mat = matrix_from_json(field(j, "M"));
  if (mat.rows() != n || mat.cols() != m) {
    std::ostringstream os;
    os << "\"M\" is " << mat.rows() << "×" << mat.cols() << " but n = " << n << ", m = " << m;
    parse_fail(os.str());
  }
  return VectorState(std::move(mat));
}

Json channel_to_json(const Channel& ch) {
  Json j;
  Json list = Json::array();
  for (const ComplexMatrix& k : ch.kraus()) list.push_back(matrix_to_json(k.adjoint()));
  j["kraus"] = std::move(list);
  j["convention"] = "heisenberg";
  return j;
}

ChannelFile channel_from_json(const Json& j) {
  const Json& list = field(j, "kraus");
  if (!list.is_array() || list.empty()) parse_fail("\"kraus\" must be a nonempty array");
  const Json& conv = field(j, "convention");
  if (!conv.is_string()) parse_fail("\"convention\" must be a string");
  const std::string name = conv.get<std::string>();
  KrausConvention convention;
  if (name == "heisenberg") {
    convention = KrausConvention::Heisenberg;
  } else if (name == "schrodinger") {
    convention = KrausConvention::Schrodinger;
  } else {
    parse_fail("unknown convention \"" + name + "\"");
  }
  std::vector<ComplexMatrix> kraus;
  for (const Json& k : list) {
    ComplexMatrix m = matrix_from_json(k);
    kraus.push_back(convention == KrausConvention::Heisenberg ? ComplexMatrix(m.adjoint()) : m);
  }
  return {Channel(std::move(kraus)), convention, convention == KrausConvention::Heisenberg};
}

Json report_to_json(const Report& r) {
  Json j;
  j["lhs"] = number_to_json(r.lhs);
  j["rhs"] = number_to_json(r.rhs);
  j["slack"] = number_to_json(r.slack);
  j["pass"] = r.pass;
  j["instance_seed"] = r.instance_seed;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::ostringstream os;
    os << origin << ":" << line << ":" << col << ": " << e.what();
    parse_fail(os.str());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path.string());
}

StateFunctional load_state(const std::filesystem::path& path) {
  return with_context(path, [](const Json& j) { return state_from_json(j); });
}

VectorState load_vector(const std::filesystem::path& path) {
  return with_context(path, [](const Json& j) { return vector_from_json(j); });
}

ChannelFile load_channel(const std::filesystem::path& path) {
  return with_context(path, [](const Json& j) { return channel_from_json(j); });
}

}  // namespace renyilab
