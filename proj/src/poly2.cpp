#include "ascurve/poly2.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <mutex>

namespace ascurve {

void Poly::trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

Poly Poly::from_bits(std::uint64_t bits) {
    Poly p;
    if (bits) p.w_.push_back(bits);
    return p;
}

Poly Poly::monomial(unsigned e) {
    Poly p;
    p.set_coeff(e, true);
    return p;
}

Poly Poly::from_exponents(const std::vector<unsigned>& exps) {
    Poly p;
    for (unsigned e : exps) p.set_coeff(e, !p.coeff(e));
    return p;
}

int Poly::degree() const {
    if (w_.empty()) return -1;
    return int(64 * (w_.size() - 1) + 63 - std::countl_zero(w_.back()));
}

bool Poly::coeff(unsigned i) const {
    std::size_t word = i / 64;
    if (word >= w_.size()) return false;
    return (w_[word] >> (i % 64)) & 1;
}

void Poly::set_coeff(unsigned i, bool v) {
    std::size_t word = i / 64;
    if (word >= w_.size()) {
        if (!v) return;
        w_.resize(word + 1, 0);
    }
    if (v)
        w_[word] |= std::uint64_t(1) << (i % 64);
    else
        w_[word] &= ~(std::uint64_t(1) << (i % 64));
    trim();
}

std::size_t Poly::weight() const {
    std::size_t n = 0;
    for (auto w : w_) n += std::size_t(std::popcount(w));
    return n;
}

std::vector<unsigned> Poly::exponents() const {
    std::vector<unsigned> e;
    int d = degree();
    for (int i = d; i >= 0; --i)
        if (coeff(unsigned(i))) e.push_back(unsigned(i));
    return e;
}

std::uint64_t Poly::bits64() const {
    if (degree() >= 64) throw std::logic_error("Poly::bits64: degree too large");
    return w_.empty() ? 0 : w_[0];
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
    for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
    trim();
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.w_.assign(w_.size() + o.w_.size(), 0);
    for (std::size_t i = 0; i < w_.size(); ++i) {
        std::uint64_t a = w_[i];
        while (a) {
            unsigned b = unsigned(std::countr_zero(a));
            a &= a - 1;
            // xor o shifted by 64*i + b into r
            unsigned sh = b;
            for (std::size_t j = 0; j < o.w_.size(); ++j) {
                std::uint64_t lo = o.w_[j] << sh;
                r.w_[i + j] ^= lo;
                if (sh) {
                    std::uint64_t hi = o.w_[j] >> (64 - sh);
                    r.w_[i + j + 1] ^= hi;
                }
            }
        }
    }
    r.trim();
    return r;
}

Poly Poly::shifted_left(unsigned k) const {
    if (is_zero()) return Poly();
    Poly r;
    unsigned words = k / 64, bits = k % 64;
    r.w_.assign(w_.size() + words + 1, 0);
    for (std::size_t i = 0; i < w_.size(); ++i) {
        r.w_[i + words] ^= w_[i] << bits;
        if (bits) r.w_[i + words + 1] ^= w_[i] >> (64 - bits);
    }
    r.trim();
    return r;
}

Poly Poly::shifted_right(unsigned k) const {
    int d = degree();
    if (d < int(k)) return Poly();
    Poly r;
    unsigned words = k / 64, bits = k % 64;
    r.w_.assign(w_.size() - words, 0);
    for (std::size_t i = 0; i < r.w_.size(); ++i) {
        r.w_[i] = w_[i + words] >> bits;
        if (bits && i + words + 1 < w_.size()) r.w_[i] |= w_[i + words + 1] << (64 - bits);
    }
    r.trim();
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q, r = f;
    int dg = g.degree();
    int dr = r.degree();
    while (dr >= dg) {
        unsigned sh = unsigned(dr - dg);
        q.set_coeff(sh, true);
        r += g.shifted_left(sh);
        dr = r.degree();
    }
    return {q, r};
}

bool Poly::operator<(const Poly& o) const {
    int d = degree(), e = o.degree();
    if (d != e) return d < e;
    if (w_.size() != o.w_.size()) return w_.size() < o.w_.size();
    for (std::size_t i = w_.size(); i-- > 0;)
        if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
}

bool Poly::eval01(bool x) const {
    if (!x) return coeff(0);
    return weight() % 2 != 0;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly derivative(const Poly& f) {
    Poly r;
    int d = f.degree();
    for (int i = 1; i <= d; i += 2)
        if (f.coeff(unsigned(i))) r.set_coeff(unsigned(i - 1), true);
    return r;
}

bool is_perfect_square(const Poly& f) {
    int d = f.degree();
    for (int i = 1; i <= d; i += 2)
        if (f.coeff(unsigned(i))) return false;
    return true;
}

Poly poly_sqrt(const Poly& f) {
    if (!is_perfect_square(f)) throw std::domain_error("poly_sqrt: not a square");
    Poly r;
    int d = f.degree();
    for (int i = 0; i <= d; i += 2)
        if (f.coeff(unsigned(i))) r.set_coeff(unsigned(i / 2), true);
    return r;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly frob_mod(Poly a, unsigned k, const Poly& m) {
    a = a % m;
    for (unsigned i = 0; i < k; ++i) a = (a * a) % m;
    return a;
}

Poly trace_mod(const Poly& a, const Poly& m) {
    unsigned d = unsigned(m.degree());
    Poly s, p = a % m;
    for (unsigned i = 0; i < d; ++i) {
        s += p;
        p = (p * p) % m;
    }
    return s;
}

Poly inv_mod(const Poly& a, const Poly& m) {
    // extended Euclid: r0 = m, r1 = a
    Poly r0 = m, r1 = a % m;
    if (r1.is_zero()) throw std::domain_error("inv_mod: zero element");
    Poly t0, t1 = Poly::one();
    while (!r1.is_zero()) {
        auto [q, r] = Poly::divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly t = t0 + q * t1;
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (!r0.is_one()) throw std::domain_error("inv_mod: element not invertible");
    return t0 % m;
}

Poly sqrt_mod(const Poly& a, const Poly& m) {
    unsigned d = unsigned(m.degree());
    return frob_mod(a, d == 0 ? 0 : d - 1, m);
}

std::vector<Poly> solve_wp_mod(const Poly& a, const Poly& m) {
    unsigned d = unsigned(m.degree());
    Poly c = a % m;
    Poly tr = trace_mod(c, m);
    if (tr.is_one()) return {};
    if (!tr.is_zero()) throw std::logic_error("solve_wp_mod: trace outside GF(2); modulus reducible?");
    Poly s;
    if (d % 2 == 1) {
        // half-trace: sum_{i=0}^{(d-1)/2} c^(4^i)
        Poly p = c;
        for (unsigned i = 0; i <= (d - 1) / 2; ++i) {
            s += p;
            p = frob_mod(p, 2, m);
        }
    } else {
        // solve the GF(2)-linear system (s^2+s) = c on the power basis
        std::vector<std::uint64_t> rows(d, 0);  // row r: equation for coeff r, cols 0..d-1 | rhs bit d
        std::vector<Poly> img(d);
        for (unsigned j = 0; j < d; ++j) {
            Poly xj = Poly::monomial(j);
            img[j] = (mulmod(xj, xj, m) + xj) % m;
        }
        if (d >= 63) throw std::logic_error("solve_wp_mod: degree too large for dense solve");
        for (unsigned r = 0; r < d; ++r) {
            std::uint64_t row = 0;
            for (unsigned j = 0; j < d; ++j)
                if (img[j].coeff(r)) row |= std::uint64_t(1) << j;
            if (c.coeff(r)) row |= std::uint64_t(1) << d;
            rows[r] = row;
        }
        // Gaussian elimination
        std::vector<int> pivot_of_col(d, -1);
        unsigned rank = 0;
        for (unsigned col = 0; col < d && rank < d; ++col) {
            unsigned sel = rank;
            while (sel < d && !((rows[sel] >> col) & 1)) ++sel;
            if (sel == d) continue;
            std::swap(rows[rank], rows[sel]);
            for (unsigned r2 = 0; r2 < d; ++r2)
                if (r2 != rank && ((rows[r2] >> col) & 1)) rows[r2] ^= rows[rank];
            pivot_of_col[col] = int(rank);
            ++rank;
        }
        for (unsigned r = rank; r < d; ++r)
            if (rows[r] != 0) throw std::logic_error("solve_wp_mod: inconsistent system");
        for (unsigned col = 0; col < d; ++col)
            if (pivot_of_col[col] >= 0 && ((rows[unsigned(pivot_of_col[col])] >> d) & 1))
                s.set_coeff(col, true);
    }
    Poly check = (mulmod(s, s, m) + s) % m;
    if (check != c) throw std::logic_error("solve_wp_mod: verification failed");
    Poly s2 = s + Poly::one();
    if (s2 < s) std::swap(s, s2);
    return {s, s2};
}

bool is_irreducible(const Poly& f) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("is_irreducible: constant polynomial");
    if (d == 1) return true;
    unsigned n = unsigned(d);
    // x^(2^n) == x mod f
    Poly xq = frob_mod(Poly::x(), n, f);
    if (xq != Poly::x() % f) return false;
    // for each prime q | n: gcd(x^(2^(n/q)) - x, f) == 1
    unsigned m = n;
    for (unsigned q = 2; q * q <= m; ++q) {
        if (m % q) continue;
        while (m % q == 0) m /= q;
        Poly g = gcd(frob_mod(Poly::x(), n / q, f) + Poly::x(), f);
        if (!g.is_one()) return false;
    }
    if (m > 1) {
        Poly g = gcd(frob_mod(Poly::x(), n / m, f) + Poly::x(), f);
        if (!g.is_one()) return false;
    }
    return true;
}

const std::vector<Poly>& irreducibles_of_degree(unsigned d) {
    static std::vector<std::vector<Poly>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.size() <= d) cache.resize(d + 1);
    if (d == 0) return cache[0];
    if (!cache[d].empty()) return cache[d];
    std::vector<Poly> out;
    if (d == 1) {
        out = {Poly::x(), Poly::x() + Poly::one()};
    } else {
        // candidates need constant term 1 and odd weight
        std::uint64_t top = std::uint64_t(1) << d;
        for (std::uint64_t mid = 0; mid < (top >> 1); ++mid) {
            std::uint64_t bits = top | (mid << 1) | 1;
            if (std::popcount(bits) % 2 == 0) continue;
            Poly f = Poly::from_bits(bits);
            if (is_irreducible(f)) out.push_back(f);
        }
        std::sort(out.begin(), out.end());
    }
    cache[d] = std::move(out);
    return cache[d];
}

Poly find_irreducible_factor(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("find_irreducible_factor: constant");
    Poly g = f;
    for (;;) {
        Poly d = derivative(g);
        if (d.is_zero()) {
            g = poly_sqrt(g);
            continue;
        }
        Poly s = g / gcd(g, d);  // squarefree and nonconstant here
        if (is_irreducible(s)) {
            // cheap exit when the squarefree part is already irreducible
            return s;
        }
        for (unsigned deg = 1; 2 * deg <= unsigned(s.degree()); ++deg) {
            for (const Poly& p : irreducibles_of_degree(deg))
                if ((s % p).is_zero()) return p;
        }
        return s;  // unreachable: s irreducible would have been caught above
    }
}

std::vector<std::pair<Poly, unsigned>> factorize(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("factorize: zero polynomial");
    std::vector<std::pair<Poly, unsigned>> out;
    Poly g = f;
    while (g.degree() > 0) {
        Poly p = find_irreducible_factor(g);
        unsigned e = 0;
        for (;;) {
            auto [q, r] = Poly::divrem(g, p);
            if (!r.is_zero()) break;
            g = q;
            ++e;
        }
        out.emplace_back(p, e);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

Poly parse_poly(std::string_view text) {
    Poly result;
    std::size_t i = 0;
    char var = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size()) throw ParseError("empty polynomial", i);
    bool expect_term = true;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        char c = text[i];
        if (!expect_term) {
            if (c == '+') {
                ++i;
                expect_term = true;
                continue;
            }
            throw ParseError(std::string("expected '+', got '") + c + "'", i);
        }
        // term: digit constant or var[^exp]
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            unsigned long val = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                val = val * 10 + unsigned(text[i] - '0');
                if (val > 1) throw ParseError("coefficients over GF(2) must be 0 or 1", start);
                ++i;
            }
            if (val == 1) result += Poly::one();
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            if (var == 0) var = c;
            if (c != var)
                throw ParseError(std::string("inconsistent variable '") + c + "'", i);
            ++i;
            unsigned e = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw ParseError("expected exponent after '^'", i);
                unsigned long v = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    v = v * 10 + unsigned(text[i] - '0');
                    if (v > 1u << 20) throw ParseError("exponent too large", i);
                    ++i;
                }
                e = unsigned(v);
            }
            Poly t = Poly::monomial(e);
            result += t;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        expect_term = false;
    }
    if (expect_term) throw ParseError("dangling '+'", i);
    return result;
}

std::string poly_to_string(const Poly& f, char var) {
    if (f.is_zero()) return "0";
    std::string s;
    int d = f.degree();
    for (int i = d; i >= 0; --i) {
        if (!f.coeff(unsigned(i))) continue;
        if (!s.empty()) s += '+';
        if (i == 0)
            s += '1';
        else if (i == 1)
            s += var;
        else {
            s += var;
            s += '^';
            s += std::to_string(i);
        }
    }
    return s;
}

}  // namespace ascurve
