/*
 * io.hpp
 * ------
 * Text formats: the line-oriented CDGA presentation grammar, the
 * simplicial-set incidence format, and the jet table format.
 *
 * Presentation grammar (one declaration per line, '#' comments):
 *   generator <name> deg <k>
 *   d <name> = <expression>
 *   relation <expression>
 *   truncate <N>
 * Expressions use + - * ^ over generator names and rational literals
 * p/q.  d defaults to zero for generators without a d-line.
 *
 * Simplicial sets: each line `<dimension> <id> <face ids...>` with the
 * faces in boundary order.
 *
 * Jet tables: header line `<n> <m>`, then one line per point: n point
 * coordinates followed by the F_alpha values in the normative
 * graded-lexicographic order of N(m,n).
 */
#pragma once

#include <cctype>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "rht/apl.hpp"
#include "rht/cdga.hpp"
#include "rht/whitney.hpp"

namespace rht::io {

// ---------------------------------------------------------------------------
// Expression parsing.

namespace detail {

struct Token {
    enum Kind { Name, Number, Plus, Minus, Star, Caret, End } kind;
    std::string text;
    int column;
};

inline std::vector<Token> tokenize(const std::string& line, int line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("syntax error at line " +
                                 std::to_string(line_no) + ", column " +
                                 std::to_string(i + 1) + ": " + what);
    };
    while (i < line.size()) {
        char c = line[i];
        int col = static_cast<int>(i + 1);
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '+') {
            out.push_back({Token::Plus, "+", col});
            ++i;
        } else if (c == '-') {
            out.push_back({Token::Minus, "-", col});
            ++i;
        } else if (c == '*') {
            out.push_back({Token::Star, "*", col});
            ++i;
        } else if (c == '^') {
            out.push_back({Token::Caret, "^", col});
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < line.size() &&
                   (std::isdigit(static_cast<unsigned char>(line[j])) ||
                    line[j] == '/'))
                ++j;
            out.push_back({Token::Number, line.substr(i, j - i), col});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[j])) ||
                    line[j] == '_'))
                ++j;
            out.push_back({Token::Name, line.substr(i, j - i), col});
            i = j;
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::End, "", static_cast<int>(line.size() + 1)});
    return out;
}

struct ExprParser {
    const cdga::CdgaPresentation& p;
    const std::vector<Token>& tokens;
    std::size_t pos = 0;
    int line_no;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::runtime_error("syntax error at line " +
                                 std::to_string(line_no) + ", column " +
                                 std::to_string(tokens[pos].column) + ": " +
                                 what);
    }

    const Token& peek() const { return tokens[pos]; }
    Token take() { return tokens[pos++]; }

    cdga::Element parse_expression() {
        cdga::Element e;
        int sign = 1;
        if (peek().kind == Token::Minus) {
            take();
            sign = -1;
        } else if (peek().kind == Token::Plus) {
            take();
        }
        e = cdga::scale(parse_term(), Rational(sign));
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            int s = take().kind == Token::Minus ? -1 : 1;
            e = cdga::add(e, cdga::scale(parse_term(), Rational(s)));
        }
        if (peek().kind != Token::End) fail("trailing input after expression");
        return e;
    }

    cdga::Element parse_term() {
        cdga::Element e = parse_factor();
        while (peek().kind == Token::Star) {
            take();
            e = cdga::multiply(p, e, parse_factor());
        }
        return e;
    }

    cdga::Element parse_factor() {
        cdga::Element base = parse_primary();
        if (peek().kind == Token::Caret) {
            take();
            if (peek().kind != Token::Number) fail("expected an exponent");
            Token t = take();
            int exp;
            try {
                exp = std::stoi(t.text);
            } catch (const std::exception&) {
                fail("bad exponent '" + t.text + "'");
            }
            if (exp < 0) fail("negative exponent");
            cdga::Element e = cdga::element_unit();
            for (int k = 0; k < exp; ++k) e = cdga::multiply(p, e, base);
            return e;
        }
        return base;
    }

    cdga::Element parse_primary() {
        if (peek().kind == Token::Number) {
            Token t = take();
            Rational q;
            try {
                q = parse_rational(t.text);
            } catch (const std::exception& ex) {
                fail(ex.what());
            }
            return cdga::scale(cdga::element_unit(), q);
        }
        if (peek().kind == Token::Name) {
            Token t = take();
            int idx;
            try {
                idx = p.generator_index(t.text);
            } catch (const std::exception&) {
                fail("unknown generator '" + t.text + "'");
            }
            return cdga::generator_element(idx);
        }
        fail("expected a generator name or rational literal");
    }
};

}  // namespace detail

// Parses an expression over the presentation's generators.  Used by the
// presentation parser after all generators are declared.
inline cdga::Element parse_element(const cdga::CdgaPresentation& p,
                                   const std::string& text, int line_no = 1) {
    auto tokens = detail::tokenize(text, line_no);
    detail::ExprParser parser{p, tokens, 0, line_no};
    return parser.parse_expression();
}

// ---------------------------------------------------------------------------
// Presentation files.

inline std::shared_ptr<const cdga::CdgaPresentation> parse_presentation(
    const std::string& text, const std::string& name = "presentation") {
    auto p = std::make_shared<cdga::CdgaPresentation>();
    p->name = name;
    struct Pending {
        int line_no;
        std::string kind;  // "d" or "relation"
        std::string target;
        std::string expr;
    };
    std::vector<Pending> pending;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool truncation_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        auto fail = [&](const std::string& what) {
            throw std::runtime_error("syntax error at line " +
                                     std::to_string(line_no) + ": " + what);
        };
        if (head == "generator") {
            std::string gname, kw;
            int deg;
            if (!(ls >> gname >> kw >> deg) || kw != "deg")
                fail("expected 'generator <name> deg <k>'");
            p->generators.push_back({gname, deg});
        } else if (head == "d") {
            std::string gname, eq;
            if (!(ls >> gname >> eq) || eq != "=")
                fail("expected 'd <name> = <expression>'");
            std::string rest;
            std::getline(ls, rest);
            pending.push_back({line_no, "d", gname, rest});
        } else if (head == "relation") {
            std::string rest;
            std::getline(ls, rest);
            pending.push_back({line_no, "relation", "", rest});
        } else if (head == "truncate") {
            if (!(ls >> p->truncation_degree))
                fail("expected 'truncate <N>'");
            truncation_seen = true;
        } else {
            fail("unknown declaration '" + head + "'");
        }
    }
    if (!truncation_seen)
        throw std::runtime_error(
            "presentation file must contain a 'truncate <N>' line");
    p->d_on_generators.assign(p->generators.size(), cdga::element_zero());
    for (const auto& item : pending) {
        if (item.kind == "d") {
            int idx;
            try {
                idx = p->generator_index(item.target);
            } catch (const std::exception&) {
                throw std::runtime_error(
                    "syntax error at line " + std::to_string(item.line_no) +
                    ": unknown generator '" + item.target + "'");
            }
            p->d_on_generators[idx] = parse_element(*p, item.expr, item.line_no);
        } else {
            p->relations.push_back(parse_element(*p, item.expr, item.line_no));
        }
    }
    cdga::finalize_presentation(*p);
    return p;
}

inline std::string element_to_string(const cdga::CdgaPresentation& p,
                                     const cdga::Element& e) {
    if (e.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e) {
        Rational q = c;
        if (first) {
            if (q < 0) {
                os << "-";
                q = -q;
            }
        } else {
            os << (q < 0 ? " - " : " + ");
            if (q < 0) q = -q;
        }
        first = false;
        if (m.is_unit()) {
            os << rat_to_string(q);
        } else {
            if (q != 1) os << rat_to_string(q) << "*";
            os << p.monomial_label(m);
        }
    }
    return os.str();
}

inline std::string print_presentation(const cdga::CdgaPresentation& p) {
    std::ostringstream os;
    for (const auto& g : p.generators)
        os << "generator " << g.name << " deg " << g.degree << "\n";
    for (std::size_t i = 0; i < p.generators.size(); ++i)
        if (!p.d_on_generators[i].empty())
            os << "d " << p.generators[i].name << " = "
               << element_to_string(p, p.d_on_generators[i]) << "\n";
    for (const auto& rel : p.relations)
        os << "relation " << element_to_string(p, rel) << "\n";
    os << "truncate " << p.truncation_degree << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Simplicial set incidence files.

inline apl::FiniteSimplicialSet parse_simplicial_set(const std::string& text) {
    apl::FiniteSimplicialSet X;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        int dim;
        std::string id;
        if (!(ls >> dim)) continue;
        if (!(ls >> id))
            throw std::runtime_error("syntax error at line " +
                                     std::to_string(line_no) +
                                     ": expected a simplex id");
        if (dim < 0)
            throw std::runtime_error("syntax error at line " +
                                     std::to_string(line_no) +
                                     ": negative dimension");
        std::vector<std::string> faces;
        std::string f;
        while (ls >> f) faces.push_back(f);
        if (static_cast<int>(faces.size()) != (dim == 0 ? 0 : dim + 1))
            throw std::runtime_error(
                "syntax error at line " + std::to_string(line_no) +
                ": a " + std::to_string(dim) + "-simplex needs " +
                std::to_string(dim == 0 ? 0 : dim + 1) + " faces");
        X.simplices[dim].push_back(id);
        if (dim > 0) X.faces[{dim, id}] = std::move(faces);
    }
    X.validate();
    return X;
}

// ---------------------------------------------------------------------------
// Jet table files.

inline whitney::Jet parse_jet_table(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;
    whitney::Jet F;
    std::size_t entries = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (n < 0) {
            std::string second;
            if (!(ls >> second))
                throw std::runtime_error("syntax error at line " +
                                         std::to_string(line_no) +
                                         ": expected header '<n> <m>'");
            try {
                n = std::stoi(first);
                m = std::stoi(second);
            } catch (const std::exception&) {
                throw std::runtime_error("syntax error at line " +
                                         std::to_string(line_no) +
                                         ": bad header '<n> <m>'");
            }
            if (n < 1 || m < 0)
                throw std::runtime_error("syntax error at line " +
                                         std::to_string(line_no) +
                                         ": header requires n >= 1, m >= 0");
            F.n = n;
            F.m = m;
            F.X.n = n;
            entries = whitney::multi_indices(n, m).size();
            continue;
        }
        std::vector<std::string> fields{first};
        std::string tok;
        while (ls >> tok) fields.push_back(tok);
        if (fields.size() != static_cast<std::size_t>(n) + entries)
            throw std::runtime_error(
                "syntax error at line " + std::to_string(line_no) + ": row "
                "needs " + std::to_string(n) + " coordinates plus " +
                std::to_string(entries) + " jet entries");
        std::vector<Rational> point, row;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            Rational q;
            try {
                q = parse_rational(fields[i]);
            } catch (const std::exception& ex) {
                throw std::runtime_error("syntax error at line " +
                                         std::to_string(line_no) + ": " +
                                         ex.what());
            }
            if (i < static_cast<std::size_t>(n))
                point.push_back(q);
            else
                row.push_back(q);
        }
        F.X.points.push_back(std::move(point));
        F.values.push_back(std::move(row));
    }
    if (n < 0)
        throw std::runtime_error("jet table is missing its '<n> <m>' header");
    F.X.validate();
    return F;
}

inline std::string print_jet_table(const whitney::Jet& F) {
    std::ostringstream os;
    os << F.n << " " << F.m << "\n";
    for (std::size_t p = 0; p < F.X.points.size(); ++p) {
        bool first = true;
        for (const auto& c : F.X.points[p]) {
            if (!first) os << " ";
            first = false;
            os << rat_to_string(c);
        }
        for (const auto& v : F.values[p]) os << " " << rat_to_string(v);
        os << "\n";
    }
    return os.str();
}

}  // namespace rht::io
