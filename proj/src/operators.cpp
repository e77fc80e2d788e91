#include "dftnum/operators.hpp"

#include <array>

namespace dftnum {

namespace {
struct KindName {
  MatrixKind kind;
  std::string_view name;
};

constexpr std::array<KindName, 10> kKindNames{{
    {MatrixKind::circulant, "circulant"},
    {MatrixKind::backward_identity, "backward_identity"},
    {MatrixKind::reflection, "reflection"},
    {MatrixKind::position, "position"},
    {MatrixKind::derivative, "derivative"},
    {MatrixKind::momentum, "momentum"},
    {MatrixKind::lowering, "lowering"},
    {MatrixKind::raising, "raising"},
    {MatrixKind::number, "number"},
    {MatrixKind::partner_number, "partner_number"},
}};
}  // namespace

std::optional<MatrixKind> matrix_kind_from_name(std::string_view name) {
  std::string normalized(name);
  for (char& ch : normalized)
    if (ch == '-') ch = '_';
  for (const auto& entry : kKindNames)
    if (entry.name == normalized) return entry.kind;
  return std::nullopt;
}

std::string_view matrix_kind_name(MatrixKind kind) {
  for (const auto& entry : kKindNames)
    if (entry.kind == kind) return entry.name;
  return "unknown";
}

}  // namespace dftnum
