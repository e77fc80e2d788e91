#pragma once

// Serialized views of matrices, eigensystems, constants and claims reports.
// JSON is canonical; CSV is a lossy spreadsheet view of the same document.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dftnum/claims.hpp"
#include "dftnum/eigen_methods.hpp"
#include "dftnum/precision.hpp"

namespace dftnum {

enum class OutputFormat { json, csv };

std::optional<OutputFormat> output_format_from_name(std::string_view name);

/// Rejected document request (unknown object, dimension out of range, ...).
class DocumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OutputDocument {
  std::string object;
  std::size_t n = 0;
  std::string precision;
  nlohmann::ordered_json payload;
  std::vector<std::vector<std::string>> table;  // CSV rows, header first
};

/// {"object", "n", "precision", "payload"} in that order.
nlohmann::ordered_json to_json(const OutputDocument& doc);

/// Text written to stdout, newline-terminated.
std::string render(const OutputDocument& doc, OutputFormat format);

/// Imaginary parts at or below this magnitude are dropped in CSV cells.
inline constexpr double kCsvImagCutoff = 1e-14;

/// Objects accepted by matrix_document(): every named operator plus phi-x,
/// split-symmetric and split-antisymmetric (the last three only for n = 5).
const std::vector<std::string>& emittable_objects();

OutputDocument matrix_document(std::string_view object, std::size_t n,
                               const PrecisionConfig& config);
OutputDocument eigensystem_document(EigenMethod method, const PrecisionConfig& config);
OutputDocument constants_document(const PrecisionConfig& config);
OutputDocument report_document(const ClaimsReport& report);

/// Inverse of the JSON encoding used in payloads: [re, im] pairs of numbers
/// (binary64) back into a matrix. Strings are rejected.
Matrix<double> matrix_from_json(const nlohmann::ordered_json& rows);
Vector<double> vector_from_json(const nlohmann::ordered_json& entries);

}  // namespace dftnum
