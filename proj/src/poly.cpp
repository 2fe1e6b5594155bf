#include "qmap/poly.hpp"

#include <algorithm>
#include <cctype>

namespace qmap {

bool graded_lex_greater(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    // x1 > x2 > ...: larger exponent on an earlier variable wins.
    return a.exp > b.exp;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    Monomial cur(static_cast<std::size_t>(nvars));
    // Recursive enumeration emitting descending graded-lex directly.
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            cur.exp[var] = static_cast<std::uint8_t>(remaining);
            out.push_back(cur);
            cur.exp[var] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur.exp[var] = static_cast<std::uint8_t>(e);
            self(self, var + 1, remaining - e);
        }
        cur.exp[var] = 0;
    };
    if (nvars == 0) {
        if (degree == 0) out.push_back(Monomial(0));
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

Poly Poly::one(int nvars) { return from_monomial(nvars, Monomial(nvars)); }

Poly Poly::variable(int nvars, int i) {
    Monomial m(static_cast<std::size_t>(nvars));
    m.exp[i] = 1;
    return from_monomial(nvars, std::move(m));
}

Poly Poly::from_monomial(int nvars, Monomial m) {
    Poly p(nvars);
    p.terms_.push_back(std::move(m));
    return p;
}

Poly Poly::from_terms(int nvars, std::vector<Monomial> terms) {
    std::sort(terms.begin(), terms.end(), graded_lex_greater);
    Poly p(nvars);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back() == t)
            p.terms_.pop_back();  // mod 2 cancellation
        else
            p.terms_.push_back(std::move(t));
    }
    return p;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().degree();
    for (auto& t : terms_)
        if (t.degree() != d) return false;
    return true;
}

Poly Poly::homogeneous_component(int d) const {
    Poly p(nvars_);
    for (auto& t : terms_)
        if (t.degree() == d) p.terms_.push_back(t);
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(nvars_);
    std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(),
                                  o.terms_.end(), std::back_inserter(r.terms_),
                                  graded_lex_greater);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    std::vector<Monomial> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (auto& a : terms_)
        for (auto& b : o.terms_) prod.push_back(a.times(b));
    return from_terms(nvars_, std::move(prod));
}

bool Poly::eval(const BitVector& point) const {
    bool acc = false;
    for (auto& t : terms_) {
        bool v = true;
        for (std::size_t i = 0; i < t.exp.size(); ++i)
            if (t.exp[i] > 0 && !point.get(i)) { v = false; break; }
        acc ^= v;
    }
    return acc;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("substitute: wrong number of images");
    int target = images.empty() ? 0 : images.front().nvars();
    Poly acc(target);
    for (auto& t : terms_) {
        Poly term = Poly::one(target);
        for (std::size_t i = 0; i < t.exp.size(); ++i)
            for (int e = 0; e < t.exp[i]; ++e) term = term * images[i];
        acc += term;
    }
    return acc;
}

Poly Poly::widened(int new_nvars) const { return shifted(0, new_nvars); }

Poly Poly::shifted(int shift, int new_nvars) const {
    Poly r(new_nvars);
    std::vector<Monomial> terms;
    for (auto& t : terms_) {
        Monomial m(static_cast<std::size_t>(new_nvars));
        for (std::size_t i = 0; i < t.exp.size(); ++i) m.exp[i + shift] = t.exp[i];
        terms.push_back(std::move(m));
    }
    return from_terms(new_nvars, std::move(terms));
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (k) s += " + ";
        const Monomial& t = terms_[k];
        if (t.degree() == 0) { s += "1"; continue; }
        bool first = true;
        for (std::size_t i = 0; i < t.exp.size(); ++i) {
            if (!t.exp[i]) continue;
            if (!first) s += "*";
            first = false;
            s += "x" + std::to_string(i + 1);
            if (t.exp[i] >= 2) s += "^" + std::to_string(t.exp[i]);
        }
    }
    return s;
}

Poly bockstein(const Poly& f) {
    // beta(x^a) = sum over variables with odd exponent of x^a * x_i.
    std::vector<Monomial> terms;
    for (auto& t : f.terms()) {
        for (std::size_t i = 0; i < t.exp.size(); ++i) {
            if (t.exp[i] & 1) {
                Monomial m = t;
                m.exp[i] += 1;
                terms.push_back(std::move(m));
            }
        }
    }
    return Poly::from_terms(f.nvars(), std::move(terms));
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    int nvars;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    unsigned parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected a number", pos);
        unsigned v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<unsigned>(s[pos] - '0');
            if (v > 100000) throw ParseError("number too large", pos);
            ++pos;
        }
        return v;
    }

    Monomial parse_factor() {
        skip_ws();
        if (pos >= s.size() || s[pos] != 'x')
            throw ParseError("expected 'x'", pos);
        std::size_t at = pos;
        ++pos;
        unsigned idx = parse_uint();
        if (idx < 1 || static_cast<int>(idx) > nvars)
            throw ParseError("variable index out of range [1," +
                                 std::to_string(nvars) + "]",
                             at);
        unsigned e = 1;
        if (peek('^')) {
            ++pos;
            e = parse_uint();
            if (e > 255) throw ParseError("exponent too large", pos);
        }
        Monomial m(static_cast<std::size_t>(nvars));
        m.exp[idx - 1] = static_cast<std::uint8_t>(e);
        return m;
    }

    Monomial parse_term() {
        skip_ws();
        if (pos < s.size() && s[pos] == '1' &&
            (pos + 1 == s.size() || !std::isdigit(static_cast<unsigned char>(s[pos + 1])))) {
            ++pos;
            return Monomial(static_cast<std::size_t>(nvars));  // the constant term
        }
        Monomial m = parse_factor();
        while (peek('*')) {
            ++pos;
            m = m.times(parse_factor());
        }
        return m;
    }

    Poly parse() {
        skip_ws();
        if (pos < s.size() && s[pos] == '0') {
            // allow a literal zero polynomial
            std::size_t save = pos;
            ++pos;
            skip_ws();
            if (pos == s.size()) return Poly::zero(nvars);
            pos = save;
        }
        std::vector<Monomial> terms;
        terms.push_back(parse_term());
        while (peek('+')) {
            ++pos;
            terms.push_back(parse_term());
        }
        skip_ws();
        if (pos != s.size()) throw ParseError("unexpected trailing input", pos);
        return Poly::from_terms(nvars, std::move(terms));
    }
};

}  // namespace

Poly parse_poly(const std::string& text, int nvars) {
    Parser p{text, 0, nvars};
    return p.parse();
}

bool PolyMatrix::is_zero() const {
    for (auto& e : entries)
        if (!e.is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows != o.rows || cols != o.cols)
        throw std::invalid_argument("PolyMatrix: shape mismatch");
    PolyMatrix r(rows, cols, nvars);
    for (std::size_t i = 0; i < entries.size(); ++i) r.entries[i] = entries[i] + o.entries[i];
    return r;
}

PolyMatrix PolyMatrix::mul(const PolyMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("PolyMatrix::mul: shape mismatch");
    PolyMatrix r(rows, o.cols, nvars);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < o.cols; ++j) {
            Poly acc(nvars);
            for (int k = 0; k < cols; ++k) acc += at(i, k) * o.at(k, j);
            r.at(i, j) = std::move(acc);
        }
    return r;
}

std::vector<Poly> PolyMatrix::apply(const std::vector<Poly>& v) const {
    if (static_cast<int>(v.size()) != cols)
        throw std::invalid_argument("PolyMatrix::apply: shape mismatch");
    std::vector<Poly> out;
    out.reserve(rows);
    for (int i = 0; i < rows; ++i) {
        Poly acc(nvars);
        for (int j = 0; j < cols; ++j) acc += at(i, j) * v[j];
        out.push_back(std::move(acc));
    }
    return out;
}

PolyMatrix PolyMatrix::bocksteined() const {
    PolyMatrix r(rows, cols, nvars);
    for (std::size_t i = 0; i < entries.size(); ++i) r.entries[i] = bockstein(entries[i]);
    return r;
}

BitMatrix PolyMatrix::eval(const BitVector& point) const {
    BitMatrix r(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j).eval(point)) r.set(i, j);
    return r;
}

bool PolyMatrix::entries_homogeneous_of_degree(int d) const {
    for (auto& e : entries) {
        if (e.is_zero()) continue;
        if (!e.is_homogeneous() || e.degree() != d) return false;
    }
    return true;
}

PolyMatrix poly_matrix_from_bits(const BitMatrix& m, int nvars) {
    PolyMatrix r(static_cast<int>(m.rows()), static_cast<int>(m.cols()), nvars);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.get(i, j)) r.at(static_cast<int>(i), static_cast<int>(j)) = Poly::one(nvars);
    return r;
}

}  // namespace qmap
