#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "helly/rational.hpp"

namespace helly {

enum class Rel { Ge, Gt, Eq };

// A linear system sum(a_i x_i) + c {>=,>,==} 0 over exact rationals, decided
// by Fourier-Motzkin elimination. Rows are normalized to coprime integer
// coefficients (positive scaling only) and deduplicated, which keeps the
// doubling in check for the small 2-variable-per-row systems produced here.
class FMSystem {
  public:
    explicit FMSystem(int nvars) : nvars_(nvars) {}

    void add(std::vector<Rat> a, Rat c, Rel rel) {
        rows_.push_back(normalize({std::move(a), c, rel}));
    }

    bool feasible() const {
        std::vector<Row> rows = rows_;
        for (int k = 0; k < nvars_; ++k)
            if (!eliminate(rows, k)) return false;
        return constants_ok(rows);
    }

    struct MinResult {
        bool feasible = false;
        bool bounded = false;
        Rat value{0};
    };

    // Minimum of x_var over the solution set. Only meaningful for systems
    // without strict rows (closed sets), where the infimum is attained.
    MinResult minimize(int var) const {
        std::vector<Row> rows = rows_;
        for (int k = 0; k < nvars_; ++k)
            if (k != var && !eliminate(rows, k)) return {};
        std::optional<Rat> lo;
        std::vector<Row> consts;
        for (const Row& r : rows) {
            if (r.a[var].numerator() == 0) {
                consts.push_back(r);
                continue;
            }
            if (r.rel == Rel::Eq) {
                Rat v = -r.c / r.a[var];
                if (!lo || v > *lo) lo = v;
                // the matching upper bound is checked via feasibility below
            } else if (r.a[var].numerator() > 0) {
                Rat v = -r.c / r.a[var];
                if (!lo || v > *lo) lo = v;
            }
        }
        std::vector<Row> all = rows;
        if (!eliminate(all, var) || !constants_ok(all)) return {};
        if (!constants_ok(consts)) return {};
        if (!lo) return {true, false, Rat(0)};
        return {true, true, *lo};
    }

  private:
    struct Row {
        std::vector<Rat> a;
        Rat c;
        Rel rel;
        auto key() const {
            std::vector<long long> k;
            for (const Rat& x : a) {
                k.push_back(x.numerator());
                k.push_back(x.denominator());
            }
            k.push_back(c.numerator());
            k.push_back(c.denominator());
            k.push_back(static_cast<long long>(rel));
            return k;
        }
    };

    static Row normalize(Row r) {
        long long mul = 1;
        for (const Rat& x : r.a) mul = std::lcm(mul, x.denominator());
        mul = std::lcm(mul, r.c.denominator());
        long long g = std::llabs(r.c.numerator() * (mul / r.c.denominator()));
        for (const Rat& x : r.a)
            g = std::gcd(g, std::llabs(x.numerator() * (mul / x.denominator())));
        Rat scale(mul, g == 0 ? 1 : g);
        for (Rat& x : r.a) x *= scale;
        r.c *= scale;
        return r;
    }

    static bool constants_ok(const std::vector<Row>& rows) {
        for (const Row& r : rows) {
            bool zero = true;
            for (const Rat& x : r.a) zero &= x.numerator() == 0;
            if (!zero) continue;
            long long c = r.c.numerator();
            if (r.rel == Rel::Eq && c != 0) return false;
            if (r.rel == Rel::Ge && c < 0) return false;
            if (r.rel == Rel::Gt && c <= 0) return false;
        }
        return true;
    }

    // Removes variable k in place; returns false on an early contradiction.
    static bool eliminate(std::vector<Row>& rows, int k) {
        // Substitute via an equality row when available.
        auto pivot = rows.end();
        for (auto it = rows.begin(); it != rows.end(); ++it)
            if (it->rel == Rel::Eq && it->a[k].numerator() != 0) {
                pivot = it;
                break;
            }
        std::vector<Row> next;
        std::set<std::vector<long long>> seen;
        auto push = [&](Row r) {
            r = normalize(std::move(r));
            if (seen.insert(r.key()).second) next.push_back(std::move(r));
        };
        if (pivot != rows.end()) {
            Row p = *pivot;
            for (const Row& r : rows) {
                if (&r == &*pivot) continue;
                if (r.a[k].numerator() == 0) {
                    push(r);
                    continue;
                }
                Row s = r;
                Rat f = r.a[k] / p.a[k];
                for (std::size_t i = 0; i < s.a.size(); ++i)
                    s.a[i] -= f * p.a[i];
                s.c -= f * p.c;
                push(std::move(s));
            }
            rows = std::move(next);
            return constants_ok(rows);
        }
        std::vector<const Row*> lower, upper;
        for (const Row& r : rows) {
            if (r.a[k].numerator() == 0)
                push(r);
            else if (r.a[k].numerator() > 0)
                lower.push_back(&r);
            else
                upper.push_back(&r);
        }
        for (const Row* l : lower)
            for (const Row* u : upper) {
                Row s;
                s.a.assign(l->a.size(), Rat(0));
                Rat fl = -u->a[k], fu = l->a[k];
                for (std::size_t i = 0; i < s.a.size(); ++i)
                    s.a[i] = fl * l->a[i] + fu * u->a[i];
                s.c = fl * l->c + fu * u->c;
                s.rel = (l->rel == Rel::Gt || u->rel == Rel::Gt) ? Rel::Gt
                                                                 : Rel::Ge;
                push(std::move(s));
            }
        rows = std::move(next);
        return constants_ok(rows);
    }

    int nvars_;
    std::vector<Row> rows_;
};

}  // namespace helly
