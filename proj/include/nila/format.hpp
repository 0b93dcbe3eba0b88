// Text format for Lie algebras: differential lines "d e3 = -e1^e2 + ..."
// plus an optional metric line "g = -e1*e11 + 2 e6*e6 + ...".
//
// A term c e^i^e^j in d e^k encodes the structure constant c_ij^k = -c
// (differentials evaluate to the negated bracket coefficient on basis pairs).
// Grammar shipped in docs/format.ebnf; emission is canonical: terms sorted by
// (i,j), unit coefficients folded into the sign, zero differentials omitted.
#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nila/bilinear_form.hpp"
#include "nila/lie_algebra.hpp"
#include "nila/rational.hpp"

namespace nila {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t line, std::size_t col)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + msg),
          line(line),
          col(col) {}
    std::size_t line, col;
};

// One two-form or symmetric-product term; indices are 1-based as in the text.
struct Term {
    Rational coeff;
    std::size_t i, j;
};

struct AlgebraDocument {
    std::string name;
    std::size_t dim = 0;
    std::map<std::size_t, std::vector<Term>> differentials;  // k -> terms of d e^k (k 1-based)
    std::optional<std::vector<Term>> metric;                  // terms c e_i * e_j, i <= j

    void canonicalize() {
        for (auto it = differentials.begin(); it != differentials.end();) {
            canonicalize_terms(it->second, /*wedge=*/true);
            it = it->second.empty() ? differentials.erase(it) : std::next(it);
        }
        if (metric) canonicalize_terms(*metric, /*wedge=*/false);
    }

private:
    static void canonicalize_terms(std::vector<Term>& terms, bool wedge) {
        std::map<std::pair<std::size_t, std::size_t>, Rational> acc;
        for (const Term& t : terms) {
            std::size_t i = t.i, j = t.j;
            Rational c = t.coeff;
            if (wedge && i > j) {
                std::swap(i, j);
                c = -c;
            }
            if (!wedge && i > j) std::swap(i, j);
            acc[{i, j}] += c;
        }
        terms.clear();
        for (auto& [ij, c] : acc)
            if (!c.is_zero()) terms.push_back(Term{c, ij.first, ij.second});
    }
};

namespace detail {

class LineLexer {
public:
    LineLexer(const std::string& s, std::size_t line_no) : s_(s), line_(line_no) {}

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size() || s_[pos_] == '#';
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, pos_ + 1); }

    BigInt integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return BigInt(s_.substr(start, pos_ - start));
    }

    std::size_t basis_index() {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != 'e') fail("expected basis element 'e<k>'");
        ++pos_;
        BigInt v = integer();
        if (v <= 0) fail("basis index must be positive");
        return static_cast<std::size_t>(v.convert_to<unsigned long long>());
    }

    std::string word() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    // optional coefficient before a basis term; sign handled by the caller
    Rational coefficient() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            return Rational(1);
        // lookahead: "e" directly after digits means this was an index, not a coefficient
        BigInt num = integer();
        if (accept('/')) {
            BigInt den = integer();
            return Rational(num, den);
        }
        return Rational(num);
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

inline std::vector<Term> parse_terms(LineLexer& lex, char product) {
    std::vector<Term> terms;
    if (lex.peek() == '0') {
        lex.expect('0');
        if (!lex.done()) lex.fail("unexpected input after '0'");
        return terms;
    }
    bool first = true;
    while (true) {
        int sign = 1;
        if (lex.accept('-'))
            sign = -1;
        else if (lex.accept('+')) {
            if (first) lex.fail("leading '+' not allowed");
        } else if (!first) {
            lex.fail("expected '+' or '-' between terms");
        }
        Rational c = lex.coefficient();
        if (sign < 0) c = -c;
        std::size_t i = lex.basis_index();
        lex.expect(product);
        std::size_t j = lex.basis_index();
        terms.push_back(Term{c, i, j});
        first = false;
        if (lex.done()) break;
    }
    return terms;
}

}  // namespace detail

inline AlgebraDocument parse_algebra(const std::string& text) {
    AlgebraDocument doc;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool saw_dim = false;
    while (std::getline(in, line)) {
        ++line_no;
        detail::LineLexer lex(line, line_no);
        if (lex.done()) continue;
        std::string head = lex.word();
        if (head == "name") {
            doc.name = lex.word();
            if (doc.name.empty()) lex.fail("expected name");
        } else if (head == "dim") {
            doc.dim = static_cast<std::size_t>(lex.integer().convert_to<unsigned long long>());
            saw_dim = true;
        } else if (head == "d") {
            std::size_t k = lex.basis_index();
            lex.expect('=');
            auto terms = detail::parse_terms(lex, '^');
            for (const Term& t : terms)
                if (t.i == t.j) lex.fail("wedge of a basis element with itself");
            if (doc.differentials.count(k)) lex.fail("duplicate differential for e" + std::to_string(k));
            doc.differentials[k] = std::move(terms);
        } else if (head == "g") {
            lex.expect('=');
            if (doc.metric) lex.fail("duplicate metric line");
            doc.metric = detail::parse_terms(lex, '*');
        } else {
            lex.fail("unknown directive '" + head + "'");
        }
        if (!lex.done()) lex.fail("trailing input");
    }
    if (!saw_dim) throw ParseError("missing 'dim' line", line_no, 1);
    auto check_index = [&](std::size_t idx) {
        if (idx < 1 || idx > doc.dim)
            throw ParseError("basis index e" + std::to_string(idx) + " out of range", line_no, 1);
    };
    for (const auto& [k, terms] : doc.differentials) {
        check_index(k);
        for (const Term& t : terms) {
            check_index(t.i);
            check_index(t.j);
        }
    }
    if (doc.metric)
        for (const Term& t : *doc.metric) {
            check_index(t.i);
            check_index(t.j);
        }
    doc.canonicalize();
    return doc;
}

inline std::string emit_terms(const std::vector<Term>& terms, char product) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms) {
        Rational a = t.coeff.abs();
        if (first) {
            if (t.coeff.sign() < 0) out += "-";
        } else {
            out += t.coeff.sign() < 0 ? " - " : " + ";
        }
        if (!a.is_one()) out += a.str() + " ";
        out += "e" + std::to_string(t.i) + product + "e" + std::to_string(t.j);
        first = false;
    }
    return out;
}

inline std::string emit_algebra(const AlgebraDocument& doc_in) {
    AlgebraDocument doc = doc_in;
    doc.canonicalize();
    std::string out;
    if (!doc.name.empty()) out += "name " + doc.name + "\n";
    out += "dim " + std::to_string(doc.dim) + "\n";
    for (const auto& [k, terms] : doc.differentials)
        out += "d e" + std::to_string(k) + " = " + emit_terms(terms, '^') + "\n";
    if (doc.metric) out += "g = " + emit_terms(*doc.metric, '*') + "\n";
    return out;
}

// c_ij^k = -(coefficient of e^i^e^j in d e^k).
inline LieAlgebra to_lie_algebra(const AlgebraDocument& doc, bool defer_jacobi = false) {
    LieAlgebra::Builder b(doc.dim);
    for (const auto& [k, terms] : doc.differentials)
        for (const Term& t : terms) b.add(t.i - 1, t.j - 1, k - 1, -t.coeff);
    return b.build(defer_jacobi);
}

// c e_i*e_j with i != j sets both symmetric entries; c e_i*e_i the diagonal.
inline std::optional<BilinearForm> to_bilinear_form(const AlgebraDocument& doc) {
    if (!doc.metric) return std::nullopt;
    Matrix gram(doc.dim, doc.dim);
    for (const Term& t : *doc.metric) {
        gram(t.i - 1, t.j - 1) += t.coeff;
        if (t.i != t.j) gram(t.j - 1, t.i - 1) += t.coeff;
    }
    return BilinearForm(gram);
}

inline AlgebraDocument document_from(const LieAlgebra& g, const std::string& name = "",
                                     const BilinearForm* metric = nullptr) {
    AlgebraDocument doc;
    doc.name = name;
    doc.dim = g.dim();
    for (std::size_t k = 0; k < g.dim(); ++k) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (std::size_t j = i + 1; j < g.dim(); ++j) {
                Rational c = g.basis_bracket(i, j)[k];
                if (!c.is_zero()) terms.push_back(Term{-c, i + 1, j + 1});
            }
        if (!terms.empty()) doc.differentials[k + 1] = std::move(terms);
    }
    if (metric) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (std::size_t j = i; j < g.dim(); ++j) {
                const Rational& c = metric->gram()(i, j);
                if (!c.is_zero()) terms.push_back(Term{c, i + 1, j + 1});
            }
        doc.metric = std::move(terms);
    }
    doc.canonicalize();
    return doc;
}

}  // namespace nila
