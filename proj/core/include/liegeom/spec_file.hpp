#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liegeom/catalog.hpp"
#include "liegeom/gaussian_rational.hpp"
#include "liegeom/matrix.hpp"

namespace liegeom {

enum class ParseErrorKind { UndeclaredLabel, DuplicateKey, MalformedScalar, MissingSection, Syntax };

std::string_view to_string(ParseErrorKind kind);

/// Parse failure with a 1-based line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, std::string reason);
    ParseErrorKind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& reason() const { return reason_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
    std::string reason_;
};

/// Parse tree of a Gaussian-rational expression.
struct ScalarExpr {
    enum class Op { Integer, ImaginaryUnit, Negate, Add, Subtract, Multiply, Divide };
    Op op = Op::Integer;
    Rational integer;                 ///< for Integer
    std::vector<ScalarExpr> args;     ///< one for Negate, two for binary ops
};

/// Grammar: integers, i, + - * / (and the middle dot), unary minus, parentheses;
/// juxtaposition before i or '(' multiplies ("1/2 i", "2(1+i)").
ScalarExpr parse_scalar_expr(std::string_view text);
/// Throws DivisionByZero on a zero divisor.
GaussianRational evaluate(const ScalarExpr& e);
/// parse_scalar_expr + evaluate; errors surface as MalformedScalar.
GaussianRational parse_scalar(std::string_view text);

/// "2 X - (1 + i) Y + Z" over the given labels; "0" is the zero vector.
Vector parse_lincomb(std::string_view text, const std::vector<std::string>& basis);
std::string format_lincomb(std::span<const GaussianRational> v, const std::vector<std::string>& basis);

using LabelPair = std::pair<std::string, std::string>;

/// A parsed .liealg file. Bracket and form keys are stored in basis order
/// with zero entries dropped, so structural equality is semantic equality.
struct SpecFile {
    std::string name;
    std::vector<std::string> basis;
    std::map<LabelPair, Vector> brackets;
    std::optional<std::map<LabelPair, GaussianRational>> form;
    std::map<std::string, Vector> isotropy;   ///< generator name -> vector
    std::vector<std::string> complement;      ///< basis labels spanning G/I
    std::map<std::string, std::string> expected;

    friend bool operator==(const SpecFile& a, const SpecFile& b) = default;
};

SpecFile parse_spec(std::string_view text);
std::string serialize(const SpecFile& spec);
/// Reads and parses a file; I/O failures raise ParseError at line 0.
SpecFile read_spec_file(const std::filesystem::path& path);

LieAlgebra to_algebra(const SpecFile& spec);
/// The form on the whole algebra (no isotropy) or on the complement (model).
std::optional<QuadraticForm> to_form(const SpecFile& spec);
std::optional<HomogeneousModel> to_model(const SpecFile& spec);
CatalogEntry to_catalog_entry(const SpecFile& spec);
/// Inverse of to_catalog_entry; model complements must be basis vectors.
SpecFile from_catalog_entry(const CatalogEntry& entry);

}  // namespace liegeom
