#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "novcoh/bicomplex.hpp"
#include "novcoh/complex.hpp"
#include "novcoh/novikov.hpp"

namespace novcoh::io {

using Json = nlohmann::json;  // std::map backed, so keys serialize sorted

inline constexpr int kFormat = 1;

Json to_json(const Scalar& s);
Json to_json(const LaurentPoly& f);
Json to_json(const ScalarMatrix& m);
Json to_json(const LaurentMatrix& m);
Json to_json(const Vector& v);

Scalar scalar_from_json(const Json& j, const BaseRing& ring, const std::string& where);
LaurentPoly laurent_from_json(const Json& j, const BaseRing& ring, const std::string& where);
ScalarMatrix scalar_matrix_from_json(const Json& j, const BaseRing& ring, std::size_t rows, std::size_t cols,
                                     const std::string& where);
LaurentMatrix laurent_matrix_from_json(const Json& j, const BaseRing& ring, std::size_t rows, std::size_t cols,
                                       const std::string& where);
Vector vector_from_json(const Json& j, const BaseRing& ring, std::size_t size, const std::string& where);

/// A parsed complex file; `cone_split`, when present, records a ConeLayout.
struct ComplexFile {
    AnyComplex complex;
    std::optional<ConeLayout> cone_split;
};

Json to_json(const AnyComplex& c, const std::optional<ConeLayout>& cone_split = std::nullopt);
ComplexFile complex_from_json(const Json& j);

/// Chain maps reference their complexes by path (relative to the map file) or inline.
Json to_json(const Map& f, const Json& source_ref, const Json& target_ref);
Map map_from_json(const Json& j, const std::filesystem::path& base_dir);

Json to_json(const DoubleComplexWindow& d);
DoubleComplexWindow bicomplex_from_json(const Json& j);

Json to_json(const TotCocycle& x);
TotCocycle cocycle_from_json(const Json& j, const BaseRing& ring);
Json to_json(const Witness& w);

Json to_json(const CohomologyReport& r);
Json to_json(const NovikovVerdict& v);
Json to_json(const RanickiResult& r);
Json to_json(const Violation& v);
Json to_json(const SquareViolation& v);
Json to_json(const BlockMismatch& m);

/// Parsed and validated input of any kind; the "kind" key selects the type.
using Input = std::variant<ComplexFile, Map, DoubleComplexWindow, TotCocycle>;

Json read_json(const std::filesystem::path& path);
/// Throws ParseError on schema problems and DomainError when a validator rejects the value.
Input parse_input(const std::filesystem::path& path);

/// Two-space indented canonical text with a trailing newline.
std::string dump(const Json& j);

/// Hex SHA-256 of the file bytes.
std::string file_digest(const std::filesystem::path& path);
std::string sha256_hex(std::string_view bytes);

}  // namespace novcoh::io
