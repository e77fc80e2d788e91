#include "dftnum/document.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "dftnum/constants.hpp"
#include "dftnum/ladder.hpp"
#include "dftnum/operators.hpp"
#include "dftnum/sparse_split.hpp"

namespace dftnum {

namespace {

using ojson = nlohmann::ordered_json;

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_real(const Extended& x) { return x.str(0, std::ios_base::fmtflags(0)); }

ojson json_real(double x) { return x; }
ojson json_real(const Extended& x) { return format_real(x); }

template <typename T>
ojson json_complex(const Complex<T>& z) {
  return ojson::array({json_real(z.re), json_real(z.im)});
}

template <typename T>
ojson json_vector(const Vector<T>& v) {
  ojson out = ojson::array();
  for (const auto& z : v) out.push_back(json_complex(z));
  return out;
}

template <typename T>
ojson json_matrix(const Matrix<T>& m) {
  ojson out = ojson::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(json_complex(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

template <typename T>
std::string csv_cell(const Complex<T>& z) {
  using std::abs;
  if (abs(z.im) <= T(kCsvImagCutoff)) return format_real(z.re);
  std::string im = format_real(z.im);
  if (im.front() != '-') im = "+" + im;
  return format_real(z.re) + im + "i";
}

template <typename T>
std::vector<std::vector<std::string>> csv_matrix(const Matrix<T>& m) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(csv_cell(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

template <typename F>
OutputDocument with_precision(const PrecisionConfig& config, F&& build) {
  if (config.mode == PrecisionMode::binary64) return build(double{});
  ExtendedPrecisionScope scope(config.digits);
  return build(Extended{});
}

const char* parity_name(Parity p) { return p == Parity::symmetric ? "symmetric" : "antisymmetric"; }

template <typename T>
OutputDocument split_document(SplitVariant variant) {
  const SplitPair<T> pair = split<T>(variant);
  OutputDocument doc;
  doc.n = 5;
  ojson entries = ojson::array();
  doc.table.push_back({"part", "row", "col", "value"});
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      doc.table.push_back({"annihilator", std::to_string(i), std::to_string(j),
                           csv_cell(pair.annihilator(i, j))});
  for (const auto& e : pair.sparse.entries()) {
    entries.push_back(
        ojson{{"row", e.row}, {"col", e.col}, {"value", json_complex(e.value)}});
    doc.table.push_back(
        {"sparse", std::to_string(e.row), std::to_string(e.col), csv_cell(e.value)});
  }
  doc.payload = ojson{
      {"variant", variant == SplitVariant::symmetric ? "symmetric" : "antisymmetric"},
      {"reconstruction",
       variant == SplitVariant::symmetric ? "s2^-1 annihilator + i sparse"
                                          : "s2^-1 (annihilator + sparse)"},
      {"annihilator", json_matrix(pair.annihilator)},
      {"sparse", ojson{{"nonzeros", pair.sparse.nonzeros()}, {"entries", std::move(entries)}}},
  };
  return doc;
}

std::string hyphenated(std::string_view name) {
  std::string out(name);
  for (char& ch : out)
    if (ch == '_') ch = '-';
  return out;
}

template <typename T>
OutputDocument named_matrix_document(const std::string& object, std::size_t n) {
  const bool five_only =
      object == "phi-x" || object == "split-symmetric" || object == "split-antisymmetric";
  if (five_only && n != 5)
    throw DocumentError("object '" + object + "' is only defined for n = 5");
  if (n < kMinMatrixDim || n > kMaxMatrixDim)
    throw DocumentError("dimension must be in " + std::to_string(kMinMatrixDim) + ".." +
                        std::to_string(kMaxMatrixDim));

  if (object == "split-symmetric") return split_document<T>(SplitVariant::symmetric);
  if (object == "split-antisymmetric") return split_document<T>(SplitVariant::antisymmetric);

  Matrix<T> m;
  if (object == "phi-x") {
    m = phi_x_product<T>();
  } else if (object == "dft") {
    m = dft_matrix<T>(n);
  } else {
    const auto kind = matrix_kind_from_name(object);
    if (!kind) throw DocumentError("unknown object '" + object + "'");
    m = build_named_matrix<T>(*kind, n);
  }
  OutputDocument doc;
  doc.n = n;
  doc.payload = ojson{{"matrix", json_matrix(m)}};
  doc.table = csv_matrix(m);
  return doc;
}

template <typename T>
OutputDocument eigensystem_document_t(EigenMethod method) {
  const EigenSystem5<T> sys = eigensystem_by_method<T>(method);
  OutputDocument doc;
  doc.n = 5;
  ojson pairs = ojson::array();
  doc.table.push_back({"n", "lambda", "dft_exponent", "parity", "f0", "f1", "f2", "f3", "f4"});
  for (const auto& p : sys.pairs) {
    pairs.push_back(ojson{{"n", p.n},
                          {"lambda", json_real(p.lambda)},
                          {"dft_exponent", p.dft_exponent},
                          {"parity", parity_name(p.parity)},
                          {"vector", json_vector(p.vector)}});
    std::vector<std::string> row{std::to_string(p.n), format_real(p.lambda),
                                 std::to_string(p.dft_exponent), parity_name(p.parity)};
    for (const auto& z : p.vector) row.push_back(csv_cell(z));
    doc.table.push_back(std::move(row));
  }
  doc.payload = ojson{{"method", std::string(eigen_method_name(method))}, {"eigenpairs", pairs}};
  return doc;
}

template <typename T>
OutputDocument constants_document_t() {
  const auto k = FifthRootConstants<T>::make();
  const auto spec = closed_form_spectrum<T>();
  const auto nl = newton_ladder<T>();
  const T eta = mixing_eta<T>();
  const T phi = mixing_angle<T>();
  const T phi_deg = phi * T(180) / pi<T>();

  auto reals = [](const auto& xs) {
    ojson a = ojson::array();
    for (const auto& x : xs) a.push_back(json_real(x));
    return a;
  };

  OutputDocument doc;
  doc.n = 5;
  doc.payload = ojson{
      {"q", json_complex(k.q)},  {"s", reals(k.s)},         {"c", reals(k.c)},
      {"xi0", json_real(k.xi0)}, {"xi1", json_real(k.xi1)}, {"lambda", reals(spec.lambda)},
      {"eta", json_real(eta)},   {"phi", json_real(phi)},   {"d", reals(nl.d)},
  };

  auto& t = doc.table;
  t.push_back({"name", "value"});
  t.push_back({"q", csv_cell(k.q)});
  for (std::size_t i = 0; i < 5; ++i) t.push_back({"s" + std::to_string(i), format_real(k.s[i])});
  for (std::size_t i = 0; i < 5; ++i) t.push_back({"c" + std::to_string(i), format_real(k.c[i])});
  t.push_back({"xi0", format_real(k.xi0)});
  t.push_back({"xi1", format_real(k.xi1)});
  for (std::size_t i = 0; i < 5; ++i)
    t.push_back({"lambda" + std::to_string(i), format_real(spec.lambda[i])});
  t.push_back({"eta", format_real(eta)});
  t.push_back({"phi_degrees", format_real(phi_deg)});
  for (std::size_t i = 0; i < 5; ++i) t.push_back({"d" + std::to_string(i), format_real(nl.d[i])});
  return doc;
}

Complex<double> complex_from_json(const ojson& z) {
  if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
    throw std::invalid_argument("expected a [re, im] pair of numbers");
  return {z[0].get<double>(), z[1].get<double>()};
}

}  // namespace

std::optional<OutputFormat> output_format_from_name(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  return std::nullopt;
}

nlohmann::ordered_json to_json(const OutputDocument& doc) {
  return ojson{{"object", doc.object},
               {"n", doc.n},
               {"precision", doc.precision},
               {"payload", doc.payload}};
}

std::string render(const OutputDocument& doc, OutputFormat format) {
  if (format == OutputFormat::json) return to_json(doc).dump(2) + "\n";
  std::ostringstream out;
  for (const auto& row : doc.table) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
    out << "\n";
  }
  return out.str();
}

const std::vector<std::string>& emittable_objects() {
  static const std::vector<std::string> names{
      "dft",      "circulant", "backward-identity", "reflection",     "position",
      "derivative", "momentum", "lowering",         "raising",        "number",
      "partner-number", "phi-x", "split-symmetric", "split-antisymmetric"};
  return names;
}

OutputDocument matrix_document(std::string_view object, std::size_t n,
                               const PrecisionConfig& config) {
  const std::string name = hyphenated(object);
  OutputDocument doc = with_precision(config, [&](auto tag) {
    return named_matrix_document<decltype(tag)>(name, n);
  });
  doc.object = name;
  doc.precision = config.label();
  return doc;
}

OutputDocument eigensystem_document(EigenMethod method, const PrecisionConfig& config) {
  OutputDocument doc = with_precision(
      config, [&](auto tag) { return eigensystem_document_t<decltype(tag)>(method); });
  doc.object = "eigensystem";
  doc.precision = config.label();
  return doc;
}

OutputDocument constants_document(const PrecisionConfig& config) {
  OutputDocument doc =
      with_precision(config, [](auto tag) { return constants_document_t<decltype(tag)>(); });
  doc.object = "constants";
  doc.precision = config.label();
  return doc;
}

OutputDocument report_document(const ClaimsReport& report) {
  OutputDocument doc;
  doc.object = "claims-report";
  doc.n = 5;
  doc.precision = report.precision;

  ojson claims = ojson::array();
  doc.table.push_back(
      {"claim_id", "status", "kind", "residual", "threshold", "corrected_residual", "note"});
  for (const auto& e : report.entries) {
    ojson c{{"claim_id", e.claim_id},
            {"identity", e.identity},
            {"status", std::string(status_name(e.status))},
            {"kind", std::string(kind_name(e.kind))},
            {"residual", e.residual},
            {"threshold", e.threshold}};
    if (e.corrected_residual) c["corrected_residual"] = *e.corrected_residual;
    if (e.correction_note) c["correction_note"] = *e.correction_note;
    claims.push_back(std::move(c));
    doc.table.push_back({e.claim_id, std::string(status_name(e.status)),
                         std::string(kind_name(e.kind)), format_real(e.residual),
                         format_real(e.threshold),
                         e.corrected_residual ? format_real(*e.corrected_residual) : "",
                         e.correction_note.value_or("")});
  }
  doc.payload = ojson{
      {"registry_version", report.registry_version},
      {"tolerance", report.tolerance},
      {"trials", report.trials},
      {"seed", report.seed},
      {"summary",
       ojson{{"total", report.entries.size()},
             {"pass", report.count(ClaimStatus::pass)},
             {"pass_with_correction", report.count(ClaimStatus::pass_with_correction)},
             {"fail", report.count(ClaimStatus::fail)}}},
      {"verified", verification_passed(report)},
      {"claims", std::move(claims)},
  };
  return doc;
}

Matrix<double> matrix_from_json(const nlohmann::ordered_json& rows) {
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("expected a nested array");
  const std::size_t n = rows.size();
  Matrix<double> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw std::invalid_argument("matrix rows must be square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = complex_from_json(rows[i][j]);
  }
  return m;
}

Vector<double> vector_from_json(const nlohmann::ordered_json& entries) {
  if (!entries.is_array()) throw std::invalid_argument("expected an array");
  std::vector<Complex<double>> v;
  for (const auto& z : entries) v.push_back(complex_from_json(z));
  return Vector<double>(std::move(v));
}

std::optional<EigenMethod> eigen_method_from_name(std::string_view name) {
  if (name == "ladder") return EigenMethod::ladder;
  if (name == "power") return EigenMethod::power;
  if (name == "newton") return EigenMethod::newton;
  if (name == "oracle") return EigenMethod::oracle;
  return std::nullopt;
}

std::string_view eigen_method_name(EigenMethod m) {
  switch (m) {
    case EigenMethod::ladder: return "ladder";
    case EigenMethod::power: return "power";
    case EigenMethod::newton: return "newton";
    case EigenMethod::oracle: return "oracle";
  }
  return "ladder";
}

}  // namespace dftnum
