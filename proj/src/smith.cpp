#include "diffcech/smith.hpp"

#include <cstdint>
#include <cstdlib>

namespace diffcech {

namespace {

struct Overflow {};

/// int64 that throws Overflow instead of wrapping.
struct Checked {
    std::int64_t v = 0;
    Checked() = default;
    Checked(std::int64_t x) : v(x) {}

    friend Checked operator+(Checked a, Checked b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow{};
        return r;
    }
    friend Checked operator-(Checked a, Checked b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
        return r;
    }
    friend Checked operator*(Checked a, Checked b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
        return r;
    }
    friend Checked operator/(Checked a, Checked b) {
        if (a.v == INT64_MIN && b.v == -1) throw Overflow{};
        return a.v / b.v;
    }
    friend Checked operator%(Checked a, Checked b) {
        if (b.v == -1) return 0;
        return a.v % b.v;
    }
    Checked operator-() const {
        if (v == INT64_MIN) throw Overflow{};
        return -v;
    }
    Checked& operator+=(Checked b) { return *this = *this + b; }
    Checked& operator-=(Checked b) { return *this = *this - b; }
    friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
    friend bool operator<(Checked a, Checked b) { return a.v < b.v; }
};

Checked magnitude(Checked x) { return x.v < 0 ? -x : x; }
mpz_class magnitude(const mpz_class& x) { return abs(x); }
bool negative(Checked x) { return x.v < 0; }
bool negative(const mpz_class& x) { return sgn(x) < 0; }
bool nonzero(Checked x) { return x.v != 0; }
bool nonzero(const mpz_class& x) { return sgn(x) != 0; }

template <class T>
T convert(const mpz_class& x);
template <>
Checked convert<Checked>(const mpz_class& x) {
    if (!x.fits_slong_p()) throw Overflow{};
    return Checked(x.get_si());
}
template <>
mpz_class convert<mpz_class>(const mpz_class& x) {
    return x;
}

mpz_class back(Checked x) { return mpz_class(static_cast<long>(x.v)); }
const mpz_class& back(const mpz_class& x) { return x; }

template <class T>
Matrix<T> convert_matrix(const IntMatrix& m) {
    Matrix<T> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = convert<T>(m(i, j));
    return out;
}

template <class T>
IntMatrix back_matrix(const Matrix<T>& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = back(m(i, j));
    return out;
}

template <class T>
class Engine {
public:
    Engine(const IntMatrix& m, SmithOptions opt) : M(convert_matrix<T>(m)), left(opt.left), right(opt.right) {
        if (left) {
            U = Matrix<T>::identity(M.rows());
            Ui = U;
        }
        if (right) {
            V = Matrix<T>::identity(M.cols());
            Vi = V;
        }
    }

    SmithForm run() {
        const std::size_t R = M.rows(), C = M.cols();
        std::size_t t = 0;
        for (; t < std::min(R, C); ++t) {
            if (!place_pivot(t)) break;
            for (;;) {
                bool dirty = false;
                for (std::size_t i = t + 1; i < R; ++i) {
                    if (!nonzero(M(i, t))) continue;
                    T q = M(i, t) / M(t, t);
                    if (nonzero(q)) row_addmul(i, t, q, t);
                    if (nonzero(M(i, t))) dirty = true;
                }
                for (std::size_t j = t + 1; j < C; ++j) {
                    if (!nonzero(M(t, j))) continue;
                    T q = M(t, j) / M(t, t);
                    if (nonzero(q)) col_addmul(j, t, q, t);
                    if (nonzero(M(t, j))) dirty = true;
                }
                if (dirty) {
                    move_smallest_in_cross(t);
                    continue;
                }
                if (!(magnitude(M(t, t)) == T(1)) && fix_divisibility(t)) continue;
                break;
            }
            if (negative(M(t, t))) negate_row(t);
        }

        SmithForm out;
        out.rank = t;
        out.D = back_matrix(M);
        for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(back(M(i, i)));
        if (left) {
            out.U = back_matrix(U);
            out.U_inv = back_matrix(Ui);
        }
        if (right) {
            out.V = back_matrix(V);
            out.V_inv = back_matrix(Vi);
        }
        return out;
    }

private:
    bool place_pivot(std::size_t t) {
        bool found = false;
        std::size_t bi = 0, bj = 0;
        T best{};
        for (std::size_t i = t; i < M.rows(); ++i) {
            for (std::size_t j = t; j < M.cols(); ++j) {
                if (!nonzero(M(i, j))) continue;
                T mag = magnitude(M(i, j));
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    bi = i;
                    bj = j;
                    if (best == T(1)) goto done;
                }
            }
        }
    done:
        if (!found) return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    void move_smallest_in_cross(std::size_t t) {
        std::size_t bi = t, bj = t;
        T best = magnitude(M(t, t));
        for (std::size_t i = t + 1; i < M.rows(); ++i)
            if (nonzero(M(i, t)) && magnitude(M(i, t)) < best) {
                best = magnitude(M(i, t));
                bi = i;
                bj = t;
            }
        for (std::size_t j = t + 1; j < M.cols(); ++j)
            if (nonzero(M(t, j)) && magnitude(M(t, j)) < best) {
                best = magnitude(M(t, j));
                bi = t;
                bj = j;
            }
        swap_rows(t, bi);
        swap_cols(t, bj);
    }

    // Adds the first row holding an entry not divisible by the pivot into the pivot row.
    bool fix_divisibility(std::size_t t) {
        for (std::size_t i = t + 1; i < M.rows(); ++i)
            for (std::size_t j = t + 1; j < M.cols(); ++j)
                if (nonzero(M(i, j) % M(t, t))) {
                    row_addmul(t, i, T(-1), t);
                    return true;
                }
        return false;
    }

    // row_i -= q * row_s
    void row_addmul(std::size_t i, std::size_t s, const T& q, std::size_t from) {
        for (std::size_t c = from; c < M.cols(); ++c)
            if (nonzero(M(s, c))) M(i, c) -= q * M(s, c);
        if (left) {
            for (std::size_t c = 0; c < U.cols(); ++c)
                if (nonzero(U(s, c))) U(i, c) -= q * U(s, c);
            for (std::size_t r = 0; r < Ui.rows(); ++r)
                if (nonzero(Ui(r, i))) Ui(r, s) += q * Ui(r, i);
        }
    }

    // col_j -= q * col_s
    void col_addmul(std::size_t j, std::size_t s, const T& q, std::size_t from) {
        for (std::size_t r = from; r < M.rows(); ++r)
            if (nonzero(M(r, s))) M(r, j) -= q * M(r, s);
        if (right) {
            for (std::size_t r = 0; r < V.rows(); ++r)
                if (nonzero(V(r, s))) V(r, j) -= q * V(r, s);
            for (std::size_t c = 0; c < Vi.cols(); ++c)
                if (nonzero(Vi(j, c))) Vi(s, c) += q * Vi(j, c);
        }
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        M.swap_rows(a, b);
        if (left) {
            U.swap_rows(a, b);
            Ui.swap_cols(a, b);
        }
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        M.swap_cols(a, b);
        if (right) {
            V.swap_cols(a, b);
            Vi.swap_rows(a, b);
        }
    }

    void negate_row(std::size_t t) {
        for (std::size_t c = 0; c < M.cols(); ++c) M(t, c) = -M(t, c);
        if (left) {
            for (std::size_t c = 0; c < U.cols(); ++c) U(t, c) = -U(t, c);
            for (std::size_t r = 0; r < Ui.rows(); ++r) Ui(r, t) = -Ui(r, t);
        }
    }

    Matrix<T> M, U, Ui, V, Vi;
    bool left, right;
};

bool in_relations(const IntVector& y, const FGAbelian& g) {
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (g.orders[i] == 0) {
            if (y[i] != 0) return false;
        } else if (y[i] % g.orders[i] != 0) {
            return false;
        }
    }
    return true;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& M, SmithOptions options) {
    try {
        return Engine<Checked>(M, options).run();
    } catch (const Overflow&) {
        return Engine<mpz_class>(M, options).run();
    }
}

IntMatrix integer_kernel(const IntMatrix& M) {
    SmithForm s = smith_normal_form(M, {false, true});
    IntMatrix K(M.cols(), M.cols() - s.rank);
    for (std::size_t j = s.rank; j < M.cols(); ++j)
        for (std::size_t i = 0; i < M.cols(); ++i) K(i, j - s.rank) = s.V(i, j);
    return K;
}

std::optional<IntVector> integer_solve(const IntMatrix& M, const IntVector& b) {
    SmithForm s = smith_normal_form(M, {true, true});
    IntVector ub = s.U.apply(b);
    IntVector y(M.cols(), mpz_class(0));
    for (std::size_t i = 0; i < ub.size(); ++i) {
        if (i < s.rank) {
            if (ub[i] % s.invariant_factors[i] != 0) return std::nullopt;
            y[i] = ub[i] / s.invariant_factors[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return s.V.apply(y);
}

bool is_exact_at(const FGAbelian& g1, const IntMatrix& f, const FGAbelian& g2, const IntMatrix& g, const FGAbelian& g3) {
    const std::size_t n1 = g1.size(), n2 = g2.size(), n3 = g3.size();
    // im f inside ker g
    IntMatrix gf = g * f;
    for (std::size_t j = 0; j < n1; ++j)
        if (!in_relations(gf.col(j), g3)) return false;

    // ker g inside im f + relations of G2
    IntMatrix lifted(n3, n2 + n3);
    for (std::size_t i = 0; i < n3; ++i) {
        for (std::size_t j = 0; j < n2; ++j) lifted(i, j) = g(i, j);
        lifted(i, n2 + i) = g3.orders[i];
    }
    IntMatrix K = integer_kernel(lifted);
    IntMatrix image(n2, n1 + n2);
    for (std::size_t i = 0; i < n2; ++i) {
        for (std::size_t j = 0; j < n1; ++j) image(i, j) = f(i, j);
        image(i, n1 + i) = g2.orders[i];
    }
    for (std::size_t c = 0; c < K.cols(); ++c) {
        IntVector x(n2);
        for (std::size_t i = 0; i < n2; ++i) x[i] = K(i, c);
        if (!integer_solve(image, x)) return false;
    }
    return true;
}

AbelianInvariants abelian_invariants(const FGAbelian& g) {
    IntMatrix d(g.size(), g.size());
    for (std::size_t i = 0; i < g.size(); ++i) d(i, i) = g.orders[i];
    SmithForm s = smith_normal_form(d, {false, false});
    AbelianInvariants out;
    for (const auto& f : s.invariant_factors)
        if (f != 1) out.torsion.push_back(f);
    out.free_rank = g.size() - s.rank;
    return out;
}

} // namespace diffcech
