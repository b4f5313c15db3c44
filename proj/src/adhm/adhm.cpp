#include "fockforge/adhm/adhm.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace fockforge::adhm {

namespace {

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

void require_shape(const QMatrix& m, int rows, int cols, const char* name) {
    if (m.rows() != static_cast<std::size_t>(rows) || m.cols() != static_cast<std::size_t>(cols))
        throw std::invalid_argument(std::string("AdhmData: ") + name + " has shape " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
}

}  // namespace

AdhmData AdhmData::zero(int d, int r) {
    if (d < 0 || r < 0) throw std::invalid_argument("AdhmData: negative dimension");
    auto n = static_cast<std::size_t>(d), k = static_cast<std::size_t>(r);
    return {d, r, QMatrix(n, n), QMatrix(n, n), QMatrix(n, k), QMatrix(k, n)};
}

void AdhmData::validate() const {
    if (d < 0 || r < 0) throw std::invalid_argument("AdhmData: negative dimension");
    require_shape(B1, d, d, "B1");
    require_shape(B2, d, d, "B2");
    require_shape(I, d, r, "I");
    require_shape(J, r, d, "J");
}

AdhmData random_adhm(std::uint64_t seed, int d, int r, bool framed) {
    std::mt19937_64 rng(seed);
    auto fill = [&](QMatrix& m) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                Rational q(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 2) + 1);
                q.canonicalize();
                m(i, j) = q;
            }
    };
    AdhmData x = AdhmData::zero(d, r);
    fill(x.B1);
    fill(x.B2);
    if (framed) {
        fill(x.I);
        fill(x.J);
    }
    return x;
}

QMatrix moment_map(const AdhmData& x) {
    x.validate();
    return commutator(x.B1, x.B2) + x.I * x.J;
}

bool is_stable(const AdhmData& x) {
    x.validate();
    const auto n = static_cast<std::size_t>(x.d);
    // echelon basis keyed by pivot index
    std::map<std::size_t, std::vector<Rational>> basis;
    std::vector<std::vector<Rational>> queue;
    for (std::size_t k = 0; k < x.I.cols(); ++k) {
        std::vector<Rational> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = x.I(i, k);
        queue.push_back(std::move(v));
    }
    auto apply = [n](const QMatrix& B, const std::vector<Rational>& v) {
        std::vector<Rational> out(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (B(i, j) != 0 && v[j] != 0) out[i] += B(i, j) * v[j];
        return out;
    };
    while (!queue.empty() && basis.size() < n) {
        auto v = std::move(queue.back());
        queue.pop_back();
        auto w = v;
        for (const auto& [p, b] : basis)
            if (w[p] != 0) {
                Rational f = w[p];
                for (std::size_t i = 0; i < n; ++i) w[i] -= f * b[i];
            }
        auto it = std::find_if(w.begin(), w.end(), [](const Rational& q) { return q != 0; });
        if (it == w.end()) continue;
        auto p = static_cast<std::size_t>(it - w.begin());
        Rational inv = 1 / w[p];
        for (auto& q : w) q *= inv;
        for (auto& [pp, b] : basis)
            if (b[p] != 0) {
                Rational f = b[p];
                for (std::size_t i = 0; i < n; ++i) b[i] -= f * w[i];
            }
        basis.emplace(p, std::move(w));
        queue.push_back(apply(x.B1, v));
        queue.push_back(apply(x.B2, v));
    }
    return basis.size() == n;
}

PartitionTuple parse_partition_tuple(const std::string& s) {
    PartitionTuple out;
    std::string slot;
    std::istringstream in(s);
    while (std::getline(in, slot, ';')) {
        Partition p;
        std::string part;
        std::istringstream ps(slot);
        while (std::getline(ps, part, ',')) {
            part.erase(std::remove_if(part.begin(), part.end(), ::isspace), part.end());
            if (part.empty()) continue;
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(part, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != part.size() || v <= 0) throw std::invalid_argument("partition: bad part '" + part + "'");
            p.push_back(v);
        }
        if (!std::is_sorted(p.rbegin(), p.rend())) throw std::invalid_argument("partition: parts must not increase");
        out.push_back(std::move(p));
    }
    if (!s.empty() && s.back() == ';') out.emplace_back();
    if (out.empty()) out.emplace_back();
    return out;
}

std::string to_string(const PartitionTuple& t) {
    std::string s;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k) s += ';';
        for (std::size_t i = 0; i < t[k].size(); ++i) s += (i ? "," : "") + std::to_string(t[k][i]);
    }
    return s;
}

namespace {

void partitions_into(int d, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(d, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_into(d - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(int d) {
    std::vector<Partition> out;
    Partition cur;
    partitions_into(d, d, cur, out);
    return out;
}

void tuples_into(int r, int d, PartitionTuple& cur, std::vector<PartitionTuple>& out) {
    if (static_cast<int>(cur.size()) == r - 1) {
        for (auto& p : partitions_of(d)) {
            cur.push_back(p);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (int k = d; k >= 0; --k)
        for (auto& p : partitions_of(k)) {
            cur.push_back(p);
            tuples_into(r, d - k, cur, out);
            cur.pop_back();
        }
}

}  // namespace

std::vector<PartitionTuple> partition_tuples(int r, int d) {
    std::vector<PartitionTuple> out;
    if (r <= 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    PartitionTuple cur;
    tuples_into(r, d, cur, out);
    return out;
}

AdhmData fixed_point_data(const PartitionTuple& lambda, std::optional<std::vector<int>> slots) {
    const int r = static_cast<int>(lambda.size());
    std::vector<int> slot(lambda.size());
    for (int k = 0; k < r; ++k) slot[k] = k;
    if (slots) {
        if (slots->size() != lambda.size()) throw std::invalid_argument("fixed_point_data: one slot per partition");
        auto sorted = *slots;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != slot) throw std::invalid_argument("fixed_point_data: slots must be a permutation of 0..r-1");
        slot = *slots;
    }
    // box (k, row, col) -> basis index
    std::map<std::tuple<int, int, int>, std::size_t> index;
    for (int k = 0; k < r; ++k) {
        const auto& p = lambda[k];
        if (!std::is_sorted(p.rbegin(), p.rend())) throw std::invalid_argument("fixed_point_data: not a partition");
        for (int i = 0; i < static_cast<int>(p.size()); ++i)
            for (int j = 0; j < p[i]; ++j) index.emplace(std::tuple{k, i, j}, index.size());
    }
    // map order is already row-major within each slot
    AdhmData x = AdhmData::zero(static_cast<int>(index.size()), r);
    for (const auto& [box, col] : index) {
        auto [k, i, j] = box;
        if (auto it = index.find({k, i, j + 1}); it != index.end()) x.B1(it->second, col) = 1;
        if (auto it = index.find({k, i + 1, j}); it != index.end()) x.B2(it->second, col) = 1;
        if (i == 0 && j == 0) x.I(col, static_cast<std::size_t>(slot[k])) = 1;
    }
    return x;
}

const exact::VarSpec& MonadMatrices::vars() {
    static const auto v = exact::VarSpec::of({"z0", "z1", "z2"});
    return *v;
}

MonadMatrices monad_matrices(const AdhmData& x) {
    x.validate();
    const auto d = static_cast<std::size_t>(x.d), r = static_cast<std::size_t>(x.r);
    const Poly z0 = Poly::var(0), z1 = Poly::var(1), z2 = Poly::var(2);
    auto lin = [&](const QMatrix& B, std::size_t i, std::size_t j, const Poly& z) {
        Poly p = z0.scaled(B(i, j));
        if (i == j) p -= z;
        return p;
    };
    MonadMatrices m{Matrix<Poly>(2 * d + r, d), Matrix<Poly>(d, 2 * d + r)};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            m.a(i, j) = lin(x.B1, i, j, z1);
            m.a(d + i, j) = lin(x.B2, i, j, z2);
            m.b(i, j) = -lin(x.B2, i, j, z2);
            m.b(i, d + j) = lin(x.B1, i, j, z1);
        }
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t j = 0; j < d; ++j) {
            m.a(2 * d + k, j) = z0.scaled(x.J(k, j));
            m.b(j, 2 * d + k) = z0.scaled(x.I(j, k));
        }
    return m;
}

Matrix<Poly> ba_residual(const AdhmData& x) {
    auto m = monad_matrices(x);
    const Poly z0sq = Poly::var(0) * Poly::var(0);
    auto mu = moment_map(x).map([&](const Rational& q) { return z0sq.scaled(q); });
    return m.b * m.a - mu;
}

UPoly characteristic_polynomial(const QMatrix& A) {
    const std::size_t n = A.rows();
    if (A.cols() != n) throw std::invalid_argument("characteristic_polynomial: not square");
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    QMatrix M(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        QMatrix next = A * M;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        M = std::move(next);
        QMatrix AM = A * M;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
        c[n - k] = -tr / static_cast<long>(k);
    }
    return UPoly(std::move(c));
}

namespace {

mpz_class horner(const std::vector<mpz_class>& a, const mpz_class& y) {
    mpz_class v = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * y + *it;
    return v;
}

// Candidate integer roots of a monic integer polynomial with a0 != 0.
std::vector<mpz_class> integer_root_candidates(const std::vector<mpz_class>& a) {
    mpz_class bound = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) bound = std::max(bound, mpz_class(abs(a[i])));
    bound += 1;
    const mpz_class a0 = abs(a[0]);
    std::vector<mpz_class> divisors;
    if (bound <= 200000) {
        for (long k = 1; k <= bound.get_si(); ++k)
            if (mpz_divisible_ui_p(a0.get_mpz_t(), static_cast<unsigned long>(k))) divisors.emplace_back(k);
    } else {
        // prime powers by trial division; a leftover cofactor is treated as prime
        std::vector<std::pair<mpz_class, int>> fac;
        mpz_class m = a0;
        for (unsigned long p = 2; p <= 1000000 && mpz_class(p) * p <= m; ++p) {
            int e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) m /= p, ++e;
            if (e) fac.emplace_back(mpz_class(p), e);
        }
        if (m > 1) fac.emplace_back(m, 1);
        divisors.emplace_back(1);
        for (const auto& [p, e] : fac) {
            const std::size_t n = divisors.size();
            mpz_class pk = 1;
            for (int k = 1; k <= e; ++k) {
                pk *= p;
                for (std::size_t i = 0; i < n; ++i)
                    if (divisors[i] * pk <= bound) divisors.push_back(divisors[i] * pk);
            }
        }
    }
    std::vector<mpz_class> out;
    for (const auto& k : divisors) {
        if (horner(a, k) == 0) out.push_back(k);
        if (horner(a, -k) == 0) out.push_back(-k);
    }
    return out;
}

std::vector<std::pair<UPoly, int>> squarefree(const UPoly& f) {
    std::vector<std::pair<UPoly, int>> out;
    if (f.degree() <= 0) return out;
    UPoly a = gcd(f, f.derivative());
    UPoly b = f.divmod(a).first;
    UPoly c = f.derivative().divmod(a).first;
    UPoly dd = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        UPoly g = gcd(b, dd);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = b.divmod(g).first;
        c = dd.divmod(g).first;
        dd = c - b.derivative();
    }
    return out;
}

}  // namespace

int Spectrum::size() const { return charpoly.degree(); }

Spectrum spectrum(const UPoly& charpoly) {
    if (charpoly.is_zero()) throw std::invalid_argument("spectrum: zero polynomial");
    Spectrum out{charpoly.monic(), {}, {}};
    UPoly rest = out.charpoly;
    // x = y / L makes the polynomial monic with integer coefficients
    mpz_class L = 1;
    for (const auto& q : rest.coeffs()) L = lcm(L, mpz_class(q.get_den()));
    std::map<Rational, int> roots;
    int zero = 0;
    while (rest.degree() > 0 && rest.coeff(0) == 0) {
        rest = rest.divmod(UPoly::x()).first;
        ++zero;
    }
    if (zero) roots[Rational(0)] = zero;
    if (rest.degree() > 0) {
        const int n = rest.degree();
        std::vector<mpz_class> a(static_cast<std::size_t>(n) + 1);
        mpz_class Lk = 1;
        for (int i = n; i >= 0; --i) {
            Rational v = rest.coeff(i) * Rational(Lk);
            a[static_cast<std::size_t>(i)] = v.get_num();  // integral by choice of L
            Lk *= L;
        }
        for (const auto& y : integer_root_candidates(a)) {
            Rational x(y, L);
            x.canonicalize();
            const UPoly lin(std::vector<Rational>{-x, 1});
            int mult = 0;
            for (;;) {
                auto [q, rem] = rest.divmod(lin);
                if (!rem.is_zero()) break;
                rest = q;
                ++mult;
            }
            if (mult) roots[x] += mult;
        }
    }
    out.roots.assign(roots.begin(), roots.end());
    out.residual = squarefree(rest);
    return out;
}

Spectrum spectrum_projection(const AdhmData& x, const Rational& c1, const Rational& c2) {
    x.validate();
    if (c1 == 0 && c2 == 0) throw std::invalid_argument("spectrum_projection: zero direction");
    return spectrum(characteristic_polynomial(x.B1.scaled(c1) + x.B2.scaled(c2)));
}

Spectrum concatenate(const Spectrum& a, const Spectrum& b) { return spectrum(a.charpoly * b.charpoly); }

AdhmData direct_sum(const AdhmData& x, const AdhmData& y, SumMode mode) {
    x.validate();
    y.validate();
    if (x.r != y.r) throw std::invalid_argument("direct_sum: framing ranks differ");
    if (mode == SumMode::FirstCarriesFraming && !(y.I.is_zero() && y.J.is_zero()))
        throw std::invalid_argument("direct_sum: second summand must have I = J = 0");
    AdhmData s = AdhmData::zero(x.d + y.d, x.r);
    const auto dx = static_cast<std::size_t>(x.d), dy = static_cast<std::size_t>(y.d),
               r = static_cast<std::size_t>(x.r);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dx; ++j) s.B1(i, j) = x.B1(i, j), s.B2(i, j) = x.B2(i, j);
    for (std::size_t i = 0; i < dy; ++i)
        for (std::size_t j = 0; j < dy; ++j) s.B1(dx + i, dx + j) = y.B1(i, j), s.B2(dx + i, dx + j) = y.B2(i, j);
    for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t i = 0; i < dx; ++i) s.I(i, k) = x.I(i, k), s.J(k, i) = x.J(k, i);
        for (std::size_t i = 0; i < dy; ++i) s.I(dx + i, k) = y.I(i, k), s.J(k, dx + i) = y.J(k, i);
    }
    return s;
}

SupportCycle support_cycle(const AdhmData& x) {
    x.validate();
    if (!commutator(x.B1, x.B2).is_zero()) throw std::invalid_argument("support_cycle: B1 and B2 do not commute");
    SupportCycle out;
    const auto n = static_cast<std::size_t>(x.d);
    const Spectrum s1 = spectrum(characteristic_polynomial(x.B1));
    for (const auto& [f, m] : s1.residual) out.unsplit += f.degree() * m;
    std::map<std::pair<Rational, Rational>, int> pts;
    for (const auto& [ev, m] : s1.roots) {
        // generalized eigenspace W of B1, preserved by B2
        QMatrix shifted = x.B1;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= ev;
        QMatrix power = QMatrix::identity(n);
        for (int k = 0; k < m; ++k) power = power * shifted;
        const QMatrix W = exact::nullspace(power);
        const QMatrix Wt = W.transpose();
        const QMatrix C = exact::inverse(Wt * W) * Wt * x.B2 * W;
        const Spectrum s2 = spectrum(characteristic_polynomial(C));
        for (const auto& [ev2, m2] : s2.roots) pts[{ev, ev2}] += m2;
        for (const auto& [f, m2] : s2.residual) out.unsplit += f.degree() * m2;
    }
    out.points.assign(pts.begin(), pts.end());
    return out;
}

namespace {

nlohmann::ordered_json matrix_json(const QMatrix& m) {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(exact::rational_to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

QMatrix matrix_from_json(const nlohmann::ordered_json& j, std::size_t rows, std::size_t cols, const char* name) {
    if (!j.is_array() || j.size() != rows)
        throw std::invalid_argument(std::string("AdhmData JSON: ") + name + " needs " + std::to_string(rows) + " rows");
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw std::invalid_argument(std::string("AdhmData JSON: ") + name + " row " + std::to_string(i) +
                                        " needs " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) {
            const auto& e = j[i][k];
            Rational q;
            if (e.is_number_integer()) {
                q = Rational(e.get<long>());
            } else if (!e.is_string() || q.set_str(e.get<std::string>(), 10) != 0 || q.get_den() == 0) {
                throw std::invalid_argument(std::string("AdhmData JSON: bad entry in ") + name);
            }
            q.canonicalize();
            m(i, k) = q;
        }
    }
    return m;
}

}  // namespace

nlohmann::ordered_json to_json(const AdhmData& x) {
    return {{"d", x.d}, {"r", x.r},           {"B1", matrix_json(x.B1)},
            {"B2", matrix_json(x.B2)}, {"I", matrix_json(x.I)}, {"J", matrix_json(x.J)}};
}

AdhmData adhm_from_json(const nlohmann::ordered_json& j) {
    const int d = j.at("d").get<int>(), r = j.at("r").get<int>();
    if (d < 0 || r < 0) throw std::invalid_argument("AdhmData JSON: negative dimension");
    const auto n = static_cast<std::size_t>(d), k = static_cast<std::size_t>(r);
    return {d, r, matrix_from_json(j.at("B1"), n, n, "B1"), matrix_from_json(j.at("B2"), n, n, "B2"),
            matrix_from_json(j.at("I"), n, k, "I"), matrix_from_json(j.at("J"), k, n, "J")};
}

}  // namespace fockforge::adhm
