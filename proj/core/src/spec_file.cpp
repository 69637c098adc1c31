#include "liegeom/spec_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "liegeom/error.hpp"

namespace liegeom {

std::string_view to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::UndeclaredLabel: return "UndeclaredLabel";
        case ParseErrorKind::DuplicateKey: return "DuplicateKey";
        case ParseErrorKind::MalformedScalar: return "MalformedScalar";
        case ParseErrorKind::MissingSection: return "MissingSection";
        case ParseErrorKind::Syntax: return "Syntax";
    }
    return "?";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, std::string reason)
    : std::runtime_error(std::string(to_string(kind)) + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + reason),
      kind_(kind),
      line_(line),
      column_(column),
      reason_(std::move(reason)) {}

namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t column;  // 1-based within the line
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

bool valid_label(std::string_view s) {
    if (s.empty() || !ident_start(s.front()) || s == "i") return false;
    return std::all_of(s.begin(), s.end(), ident_char);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<Token> tokenize(std::string_view text, std::size_t line, std::size_t col0, ParseErrorKind err) {
    std::vector<Token> out;
    std::size_t p = 0;
    while (p < text.size()) {
        const char c = text[p];
        const std::size_t col = col0 + p;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++p;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t q = p;
            while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
            out.push_back({Token::Kind::Number, std::string(text.substr(p, q - p)), col});
            p = q;
        } else if (ident_start(c)) {
            std::size_t q = p;
            while (q < text.size() && ident_char(text[q])) ++q;
            out.push_back({Token::Kind::Ident, std::string(text.substr(p, q - p)), col});
            p = q;
        } else if (c == '+') {
            out.push_back({Token::Kind::Plus, "+", col}), ++p;
        } else if (c == '-') {
            out.push_back({Token::Kind::Minus, "-", col}), ++p;
        } else if (c == '*') {
            out.push_back({Token::Kind::Star, "*", col}), ++p;
        } else if (c == '/') {
            out.push_back({Token::Kind::Slash, "/", col}), ++p;
        } else if (c == '(') {
            out.push_back({Token::Kind::LParen, "(", col}), ++p;
        } else if (c == ')') {
            out.push_back({Token::Kind::RParen, ")", col}), ++p;
        } else if (static_cast<unsigned char>(c) == 0xC2 && p + 1 < text.size() &&
                   static_cast<unsigned char>(text[p + 1]) == 0xB7) {
            out.push_back({Token::Kind::Star, "\xC2\xB7", col}), p += 2;
        } else {
            throw ParseError(err, line, col, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::Kind::End, "", col0 + text.size()});
    return out;
}

class ExprParser {
public:
    ExprParser(std::vector<Token> tokens, std::size_t line) : toks_(std::move(tokens)), line_(line) {}

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool at(Token::Kind k) const { return peek().kind == k; }
    bool at_imaginary() const { return at(Token::Kind::Ident) && peek().text == "i"; }
    bool at_label() const { return at(Token::Kind::Ident) && peek().text != "i"; }

    [[noreturn]] void fail(const std::string& reason, ParseErrorKind kind = ParseErrorKind::MalformedScalar) const {
        throw ParseError(kind, line_, peek().column, reason);
    }

    ScalarExpr expr() {
        ScalarExpr lhs = term();
        while (at(Token::Kind::Plus) || at(Token::Kind::Minus)) {
            const auto op = next().kind == Token::Kind::Plus ? ScalarExpr::Op::Add : ScalarExpr::Op::Subtract;
            lhs = binary(op, std::move(lhs), term());
        }
        return lhs;
    }

    /// Product chain without top-level + or -; stops before a basis label.
    ScalarExpr product(bool allow_unary) {
        ScalarExpr lhs = allow_unary ? unary() : primary();
        for (;;) {
            if (at(Token::Kind::Star) || at(Token::Kind::Slash)) {
                // "2 * X": the star belongs to the coefficient/label split.
                if (toks_[pos_ + 1].kind == Token::Kind::Ident && toks_[pos_ + 1].text != "i") return lhs;
                const auto op = next().kind == Token::Kind::Star ? ScalarExpr::Op::Multiply : ScalarExpr::Op::Divide;
                lhs = binary(op, std::move(lhs), allow_unary ? unary() : primary());
            } else if (at_imaginary() || at(Token::Kind::LParen)) {
                lhs = binary(ScalarExpr::Op::Multiply, std::move(lhs), primary());
            } else {
                return lhs;
            }
        }
    }

private:
    static ScalarExpr binary(ScalarExpr::Op op, ScalarExpr a, ScalarExpr b) {
        ScalarExpr e;
        e.op = op;
        e.args.push_back(std::move(a));
        e.args.push_back(std::move(b));
        return e;
    }

    ScalarExpr term() { return product(true); }

    ScalarExpr unary() {
        if (at(Token::Kind::Minus)) {
            next();
            ScalarExpr e;
            e.op = ScalarExpr::Op::Negate;
            e.args.push_back(unary());
            return e;
        }
        if (at(Token::Kind::Plus)) {
            next();
            return unary();
        }
        return primary();
    }

    ScalarExpr primary() {
        if (at(Token::Kind::Number)) {
            ScalarExpr e;
            e.integer = Rational(mpz_class(next().text));
            return e;
        }
        if (at_imaginary()) {
            next();
            ScalarExpr e;
            e.op = ScalarExpr::Op::ImaginaryUnit;
            return e;
        }
        if (at(Token::Kind::LParen)) {
            next();
            ScalarExpr e = expr();
            if (!at(Token::Kind::RParen)) fail("expected ')'");
            next();
            return e;
        }
        if (at(Token::Kind::End)) fail("unexpected end of expression");
        fail("unexpected '" + peek().text + "'");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

GaussianRational eval_at(const ScalarExpr& e, std::size_t line, std::size_t column) {
    try {
        return evaluate(e);
    } catch (const Error& err) {
        throw ParseError(ParseErrorKind::MalformedScalar, line, column, err.what());
    }
}

GaussianRational scalar_at(std::string_view text, std::size_t line, std::size_t col0) {
    ExprParser p(tokenize(text, line, col0, ParseErrorKind::MalformedScalar), line);
    if (p.at(Token::Kind::End)) p.fail("empty scalar");
    ScalarExpr e = p.expr();
    if (!p.at(Token::Kind::End)) p.fail("trailing input '" + p.peek().text + "'");
    return eval_at(e, line, col0);
}

Vector lincomb_at(std::string_view text, const std::vector<std::string>& basis, std::size_t line, std::size_t col0) {
    ExprParser p(tokenize(text, line, col0, ParseErrorKind::Syntax), line);
    Vector v(basis.size());
    if (p.at(Token::Kind::End)) p.fail("empty linear combination", ParseErrorKind::Syntax);
    bool first = true;
    bool bare_zero = false;
    while (!p.at(Token::Kind::End)) {
        GaussianRational sign = 1;
        if (p.at(Token::Kind::Plus) || p.at(Token::Kind::Minus)) {
            if (p.next().kind == Token::Kind::Minus) sign = -1;
        } else if (!first) {
            p.fail("expected '+' or '-' between terms", ParseErrorKind::Syntax);
        }
        first = false;

        GaussianRational coeff = 1;
        const std::size_t coeff_col = p.peek().column;
        if (!p.at_label()) {
            coeff = eval_at(p.product(false), line, coeff_col);
            if (p.at(Token::Kind::Star)) p.next();
            if (!p.at_label()) {
                if (coeff.is_zero() && p.at(Token::Kind::End)) {
                    bare_zero = true;
                    break;
                }
                p.fail("expected a basis label", ParseErrorKind::Syntax);
            }
        }
        const Token& label = p.next();
        const auto it = std::find(basis.begin(), basis.end(), label.text);
        if (it == basis.end())
            throw ParseError(ParseErrorKind::UndeclaredLabel, line, label.column, "undeclared label '" + label.text + "'");
        v[static_cast<std::size_t>(it - basis.begin())] += sign * coeff;
    }
    if (bare_zero && !is_zero(v)) p.fail("a bare 0 must stand alone", ParseErrorKind::Syntax);
    return v;
}

std::vector<std::string> split_list(std::string_view s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = s.find(',', start);
        out.emplace_back(trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string format_coefficient_term(const GaussianRational& c, const std::string& label, bool first) {
    const bool complex = !c.is_real() && sgn(c.re()) != 0;
    if (complex) return std::string(first ? "" : " + ") + "(" + c.to_string() + ") " + label;
    const bool negative = c.is_real() ? sgn(c.re()) < 0 : sgn(c.im()) < 0;
    const GaussianRational mag = negative ? -c : c;
    std::string out = first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (!mag.is_one()) out += mag.to_string() + " ";
    return out + label;
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

std::size_t index_in(const std::vector<std::string>& labels, const std::string& l) {
    return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), l) - labels.begin());
}

}  // namespace

ScalarExpr parse_scalar_expr(std::string_view text) {
    ExprParser p(tokenize(text, 1, 1, ParseErrorKind::MalformedScalar), 1);
    if (p.at(Token::Kind::End)) p.fail("empty scalar");
    ScalarExpr e = p.expr();
    if (!p.at(Token::Kind::End)) p.fail("trailing input '" + p.peek().text + "'");
    return e;
}

GaussianRational evaluate(const ScalarExpr& e) {
    switch (e.op) {
        case ScalarExpr::Op::Integer: return GaussianRational(e.integer);
        case ScalarExpr::Op::ImaginaryUnit: return GaussianRational::i();
        case ScalarExpr::Op::Negate: return -evaluate(e.args[0]);
        case ScalarExpr::Op::Add: return evaluate(e.args[0]) + evaluate(e.args[1]);
        case ScalarExpr::Op::Subtract: return evaluate(e.args[0]) - evaluate(e.args[1]);
        case ScalarExpr::Op::Multiply: return evaluate(e.args[0]) * evaluate(e.args[1]);
        case ScalarExpr::Op::Divide: return evaluate(e.args[0]) / evaluate(e.args[1]);
    }
    return {};
}

GaussianRational parse_scalar(std::string_view text) { return scalar_at(text, 1, 1); }

Vector parse_lincomb(std::string_view text, const std::vector<std::string>& basis) {
    return lincomb_at(text, basis, 1, 1);
}

std::string format_lincomb(std::span<const GaussianRational> v, const std::vector<std::string>& basis) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) out += format_coefficient_term(v[k], basis[k], out.empty());
    return out.empty() ? "0" : out;
}

SpecFile parse_spec(std::string_view text) {
    SpecFile spec;
    enum class Section { None, Algebra, Brackets, Form, Isotropy, Expected };
    Section section = Section::None;
    std::set<std::string> seen_sections;
    std::set<std::string> seen_keys;
    bool have_algebra = false;
    std::optional<std::pair<std::size_t, std::size_t>> dim_decl;  // value, line
    std::size_t dim_col = 0;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        std::string_view raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

        // Strip a comment outside double quotes.
        bool in_quote = false;
        for (std::size_t p = 0; p < raw.size(); ++p) {
            if (raw[p] == '"') in_quote = !in_quote;
            if (raw[p] == '#' && !in_quote) {
                raw = raw.substr(0, p);
                break;
            }
        }
        const std::string_view line = trim(raw);
        if (line.empty()) continue;
        const std::size_t line_col = static_cast<std::size_t>(line.data() - raw.data()) + 1;

        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(ParseErrorKind::Syntax, line_no, line_col, "unterminated section header");
            const std::string name(trim(line.substr(1, line.size() - 2)));
            if (!seen_sections.insert(name).second)
                throw ParseError(ParseErrorKind::DuplicateKey, line_no, line_col, "section [" + name + "] repeated");
            if (name == "algebra") section = Section::Algebra, have_algebra = true;
            else if (name == "brackets") section = Section::Brackets;
            else if (name == "form") section = Section::Form, spec.form.emplace();
            else if (name == "isotropy") section = Section::Isotropy;
            else if (name == "expected") section = Section::Expected;
            else throw ParseError(ParseErrorKind::Syntax, line_no, line_col, "unknown section [" + name + "]");
            if (section != Section::Algebra && spec.basis.empty())
                throw ParseError(ParseErrorKind::MissingSection, line_no, line_col,
                                 "[algebra] with a basis must come before [" + name + "]");
            continue;
        }
        if (section == Section::None)
            throw ParseError(ParseErrorKind::MissingSection, line_no, line_col, "entry outside any section");

        const std::size_t eq = [&] {
            bool q = false;
            for (std::size_t p = 0; p < line.size(); ++p) {
                if (line[p] == '"') q = !q;
                if (line[p] == '=' && !q) return p;
            }
            return std::string_view::npos;
        }();
        if (eq == std::string_view::npos) throw ParseError(ParseErrorKind::Syntax, line_no, line_col, "expected 'key = value'");

        const std::string_view key_text = trim(line.substr(0, eq));
        std::string_view value = line.substr(eq + 1);
        std::size_t value_col = line_col + eq + 1;
        while (!value.empty() && std::isspace(static_cast<unsigned char>(value.front()))) value.remove_prefix(1), ++value_col;
        value = trim(value);
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
            ++value_col;
        }

        std::optional<LabelPair> pair;
        std::string key;
        std::size_t key_col = line_col;
        if (!key_text.empty() && key_text.front() == '"') {
            if (key_text.size() < 2 || key_text.back() != '"')
                throw ParseError(ParseErrorKind::Syntax, line_no, key_col, "unterminated quoted key");
            const auto parts = split_list(key_text.substr(1, key_text.size() - 2));
            if (parts.size() != 2) throw ParseError(ParseErrorKind::Syntax, line_no, key_col, "quoted key must be a pair \"A,B\"");
            pair = LabelPair{parts[0], parts[1]};
            key = parts[0] + "," + parts[1];
        } else {
            key = std::string(key_text);
            if (key.empty() || !std::all_of(key.begin(), key.end(), ident_char) || !ident_start(key.front()))
                throw ParseError(ParseErrorKind::Syntax, line_no, key_col, "malformed key '" + key + "'");
        }

        auto require_pair = [&](const char* what) {
            if (!pair) throw ParseError(ParseErrorKind::Syntax, line_no, key_col, std::string(what) + " keys are quoted pairs \"A,B\"");
            for (const auto* l : {&pair->first, &pair->second})
                if (index_in(spec.basis, *l) == spec.basis.size())
                    throw ParseError(ParseErrorKind::UndeclaredLabel, line_no, key_col, "undeclared label '" + *l + "'");
            if (index_in(spec.basis, pair->first) > index_in(spec.basis, pair->second)) {
                std::swap(pair->first, pair->second);
                return true;
            }
            return false;
        };
        auto claim = [&](const std::string& k) {
            if (!seen_keys.insert(k).second)
                throw ParseError(ParseErrorKind::DuplicateKey, line_no, key_col, "duplicate key '" + k + "'");
        };

        switch (section) {
            case Section::Algebra: {
                if (pair) throw ParseError(ParseErrorKind::Syntax, line_no, key_col, "[algebra] keys are bare identifiers");
                claim("algebra." + key);
                if (key == "name") {
                    spec.name = std::string(value);
                } else if (key == "dim") {
                    const std::string d(value);
                    if (d.empty() || !std::all_of(d.begin(), d.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                        throw ParseError(ParseErrorKind::Syntax, line_no, value_col, "dim must be a non-negative integer");
                    dim_decl = {std::stoul(d), line_no};
                    dim_col = value_col;
                } else if (key == "basis") {
                    for (auto& l : split_list(value)) {
                        if (!valid_label(l))
                            throw ParseError(ParseErrorKind::Syntax, line_no, value_col, "invalid basis label '" + l + "'");
                        if (index_in(spec.basis, l) != spec.basis.size())
                            throw ParseError(ParseErrorKind::DuplicateKey, line_no, value_col, "basis label '" + l + "' repeated");
                        spec.basis.push_back(std::move(l));
                    }
                } else {
                    throw ParseError(ParseErrorKind::Syntax, line_no, key_col, "unknown [algebra] key '" + key + "'");
                }
                break;
            }
            case Section::Brackets: {
                const bool flipped = require_pair("[brackets]");
                if (pair->first == pair->second)
                    throw ParseError(ParseErrorKind::Syntax, line_no, key_col, "bracket of a label with itself");
                claim("brackets." + pair->first + "," + pair->second);
                Vector v = lincomb_at(value, spec.basis, line_no, value_col);
                if (flipped) v = scale(-1, v);
                if (!is_zero(v)) spec.brackets.emplace(*pair, std::move(v));
                break;
            }
            case Section::Form: {
                require_pair("[form]");
                claim("form." + pair->first + "," + pair->second);
                GaussianRational s = scalar_at(value, line_no, value_col);
                if (!s.is_zero()) spec.form->emplace(*pair, std::move(s));
                break;
            }
            case Section::Isotropy: {
                if (pair) throw ParseError(ParseErrorKind::Syntax, line_no, key_col, "[isotropy] keys are bare identifiers");
                claim("isotropy." + key);
                if (key == "complement") {
                    for (auto& l : split_list(value)) {
                        if (index_in(spec.basis, l) == spec.basis.size())
                            throw ParseError(ParseErrorKind::UndeclaredLabel, line_no, value_col, "undeclared label '" + l + "'");
                        spec.complement.push_back(std::move(l));
                    }
                } else {
                    spec.isotropy.emplace(key, lincomb_at(value, spec.basis, line_no, value_col));
                }
                break;
            }
            case Section::Expected: {
                if (pair) throw ParseError(ParseErrorKind::Syntax, line_no, key_col, "[expected] keys are bare identifiers");
                const auto& known = known_properties();
                if (std::find(known.begin(), known.end(), key) == known.end())
                    throw ParseError(ParseErrorKind::Syntax, line_no, key_col, "unknown property '" + key + "'");
                claim("expected." + key);
                spec.expected.emplace(key, std::string(value));
                break;
            }
            case Section::None: break;
        }
    }

    if (!have_algebra) throw ParseError(ParseErrorKind::MissingSection, 1, 1, "missing [algebra] section");
    if (spec.basis.empty()) throw ParseError(ParseErrorKind::MissingSection, 1, 1, "[algebra] declares no basis");
    if (dim_decl && dim_decl->first != spec.basis.size())
        throw ParseError(ParseErrorKind::Syntax, dim_decl->second, dim_col,
                         "dim " + std::to_string(dim_decl->first) + " differs from " + std::to_string(spec.basis.size()) +
                             " basis labels");
    if (!spec.isotropy.empty() && spec.complement.empty())
        throw ParseError(ParseErrorKind::MissingSection, line_no, 1, "[isotropy] needs a complement");
    return spec;
}

std::string serialize(const SpecFile& spec) {
    std::ostringstream out;
    out << "[algebra]\n";
    if (!spec.name.empty()) out << "name = " << spec.name << "\n";
    out << "dim = " << spec.basis.size() << "\nbasis = ";
    for (std::size_t i = 0; i < spec.basis.size(); ++i) out << (i ? ", " : "") << spec.basis[i];
    out << "\n";

    auto pair_key = [](const LabelPair& p) { return quote(p.first + "," + p.second); };
    if (!spec.brackets.empty()) {
        out << "\n[brackets]\n";
        for (const auto& [p, v] : spec.brackets) out << pair_key(p) << " = " << quote(format_lincomb(v, spec.basis)) << "\n";
    }
    if (spec.form) {
        out << "\n[form]\n";
        for (const auto& [p, s] : *spec.form) out << pair_key(p) << " = " << quote(s.to_string()) << "\n";
    }
    if (!spec.isotropy.empty() || !spec.complement.empty()) {
        out << "\n[isotropy]\n";
        for (const auto& [name, v] : spec.isotropy) out << name << " = " << quote(format_lincomb(v, spec.basis)) << "\n";
        out << "complement = ";
        for (std::size_t i = 0; i < spec.complement.size(); ++i) out << (i ? ", " : "") << spec.complement[i];
        out << "\n";
    }
    if (!spec.expected.empty()) {
        out << "\n[expected]\n";
        for (const auto& [k, v] : spec.expected) out << k << " = " << v << "\n";
    }
    return out.str();
}

SpecFile read_spec_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(ParseErrorKind::Syntax, 0, 0, "cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

LieAlgebra to_algebra(const SpecFile& spec) {
    LieAlgebra g(spec.basis);
    for (const auto& [p, v] : spec.brackets) g.set_bracket(p.first, p.second, v);
    return g;
}

std::optional<QuadraticForm> to_form(const SpecFile& spec) {
    if (!spec.form) return std::nullopt;
    const auto& labels = spec.isotropy.empty() ? spec.basis : spec.complement;
    CMatrix gram(labels.size(), labels.size());
    for (const auto& [p, s] : *spec.form) {
        const std::size_t i = index_in(labels, p.first), j = index_in(labels, p.second);
        if (i == labels.size() || j == labels.size())
            throw Error(ErrorKind::PreconditionViolated, "form entry " + p.first + "," + p.second + " lies outside the complement");
        gram(i, j) = s;
        gram(j, i) = s;
    }
    return QuadraticForm(std::move(gram));
}

std::optional<HomogeneousModel> to_model(const SpecFile& spec) {
    if (spec.isotropy.empty()) return std::nullopt;
    const std::size_t n = spec.basis.size();
    std::vector<Vector> iso;
    for (const auto& [name, v] : spec.isotropy) iso.push_back(v);
    std::vector<Vector> comp;
    for (const auto& l : spec.complement) comp.push_back(unit_vector(n, index_in(spec.basis, l)));
    return HomogeneousModel(to_algebra(spec), std::move(iso), std::move(comp), spec.complement, to_form(spec));
}

CatalogEntry to_catalog_entry(const SpecFile& spec) {
    CatalogEntry e;
    e.id = spec.name;
    e.algebra = to_algebra(spec);
    e.model = to_model(spec);
    if (!e.model) e.form = to_form(spec);
    for (const auto& [k, v] : spec.expected) e.expected.push_back({k, v});
    return e;
}

SpecFile from_catalog_entry(const CatalogEntry& entry) {
    SpecFile spec;
    spec.name = entry.id;
    const LieAlgebra& g = entry.algebra;
    spec.basis = g.basis_names();
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector v = g.bracket_basis(i, j);
            if (!is_zero(v)) spec.brackets.emplace(LabelPair{spec.basis[i], spec.basis[j]}, std::move(v));
        }

    auto put_form = [&](const QuadraticForm& q, const std::vector<std::string>& labels) {
        spec.form.emplace();
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = i; j < labels.size(); ++j) {
                if (q(i, j).is_zero()) continue;
                LabelPair p{labels[i], labels[j]};
                if (index_in(spec.basis, p.first) > index_in(spec.basis, p.second)) std::swap(p.first, p.second);
                spec.form->emplace(p, q(i, j));
            }
    };

    if (entry.model) {
        const auto& m = *entry.model;
        for (const auto& c : m.complement()) {
            std::optional<std::size_t> idx;
            for (std::size_t k = 0; k < n; ++k) {
                if (c[k].is_zero()) continue;
                if (idx || !c[k].is_one())
                    throw Error(ErrorKind::PreconditionViolated, "complement vectors must be basis vectors to serialize");
                idx = k;
            }
            spec.complement.push_back(spec.basis[*idx]);
        }
        const auto& iso = m.isotropy();
        for (std::size_t k = 0; k < iso.size(); ++k)
            spec.isotropy.emplace(iso.size() == 1 ? "generator" : "generator" + std::to_string(k + 1), iso[k]);
        if (m.form()) put_form(*m.form(), spec.complement);
    } else if (entry.form) {
        put_form(*entry.form, spec.basis);
    }
    for (const auto& e : entry.expected) spec.expected[e.property] = e.value;
    return spec;
}

}  // namespace liegeom
