// Acceptance suite: every check prints one PASS/FAIL line with its elapsed
// time; the process exit code is the number of failed checks. All integer
// comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hh_oracle.hpp"
#include "singlab/hochschild.hpp"
#include "singlab/maslov.hpp"
#include "singlab/monodromy.hpp"
#include "singlab/resolutions.hpp"
#include "singlab/singularity.hpp"
#include "singlab/smith.hpp"

using namespace singlab;

namespace {

int failures = 0;

struct Checker {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

void criterion(int number, const std::string& title,
               const std::function<void(Checker&)>& body) {
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.notes.push_back(std::string("exception: ") + e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s [%2d] %-58s (%.3f s)\n", c.ok ? "PASS" : "FAIL", number, title.c_str(),
                dt);
    for (const auto& n : c.notes) std::printf("       - %s\n", n.c_str());
    if (!c.ok) ++failures;
}

DiagonalSingularity a1(std::int64_t k) { return DiagonalSingularity({2, 2, 2, 2 * k}); }

std::int64_t b0_of_unique_generator(const DiagonalSingularity& s, std::int64_t degree,
                                    Checker& c) {
    auto t = hh_dimensions(s, DegreeWindow{degree, degree});
    auto it = t.generators.find(degree);
    if (it == t.generators.end() || it->second.size() != 1) {
        c.expect(false, "expected exactly one generator in degree " +
                            std::to_string(degree));
        return INT64_MIN;
    }
    return it->second[0].b0;
}

}  // namespace

int main() {
    criterion(1, "Milnor numbers of the double point family", [](Checker& c) {
        for (std::int64_t k = 1; k <= 10; ++k)
            c.expect(milnor_number(a1(k)) == 2 * k - 1,
                     "mu(2,2,2," + std::to_string(2 * k) + ") != 2k-1");
        c.expect(milnor_number(DiagonalSingularity({2, 3})) == 2, "mu(2,3) != 2");
    });

    criterion(2, "monodromy eigenvalues and det(M - I)", [](Checker& c) {
        auto cm = char_poly(DiagonalSingularity({2, 2, 2, 3}));
        c.expect(cm.multiplicities() == std::map<std::int64_t, std::int64_t>{{6, 1}},
                 "char poly of (2,2,2,3) is not Phi_6");
        auto cm2 = char_poly(DiagonalSingularity({2, 2, 2, 2, 3}));
        c.expect(cm2.multiplicities() == std::map<std::int64_t, std::int64_t>{{3, 1}},
                 "char poly of (2,2,2,2,3) is not Phi_3");
        c.expect(big_abs(det_h_minus_id(DiagonalSingularity({2, 2, 2, 3}))) == 1,
                 "|det| != 1 for (2,2,2,3)");
        c.expect(big_abs(det_h_minus_id(DiagonalSingularity({2, 3, 5}))) == 1,
                 "|det| != 1 for (2,3,5)");
        for (std::int64_t k = 1; k <= 10; ++k)
            c.expect(det_h_minus_id(a1(k)) == 0,
                     "det != 0 for k = " + std::to_string(k));
    });

    criterion(3, "link classification and the (2,2,m,n) free ranks", [](Checker& c) {
        for (std::int64_t k = 1; k <= 10; ++k) {
            auto even = classify_link(a1(k));
            c.expect(even.kind == LinkClassification::Kind::ConnectedSumS2xS3 &&
                         even.connected_sum_count == 1,
                     "link of A1(" + std::to_string(2 * k) + ") is not S^2 x S^3");
            auto m = integral_monodromy(a1(k));
            auto f = smith_normal_form(m - IntegerMatrix::identity(m.rows()),
                                       SnfOptions{false});
            bool shape = f.diagonal.back() == 0;
            for (std::size_t i = 0; i + 1 < f.diagonal.size(); ++i)
                shape = shape && f.diagonal[i] == 1;
            c.expect(shape, "SNF of M - I is not diag(1,..,1,0) for k = " +
                                std::to_string(k));
            auto odd = classify_link(DiagonalSingularity({2, 2, 2, 2 * k + 1}));
            c.expect(odd.kind == LinkClassification::Kind::Sphere && odd.sphere_dim == 5,
                     "link of (2,2,2," + std::to_string(2 * k + 1) + ") is not S^5");
        }
        for (std::int64_t m = 2; m <= 24; ++m)
            for (std::int64_t n = 2; n <= 24; ++n) {
                DiagonalSingularity s({2, 2, m, n});
                auto mono = integral_monodromy(s);
                auto f = smith_normal_form(mono - IntegerMatrix::identity(mono.rows()),
                                           SnfOptions{false});
                c.expect(BigInt(f.free_rank()) == std::gcd(m, n) - 1,
                         "free rank mismatch at (2,2," + std::to_string(m) + "," +
                             std::to_string(n) + ")");
            }
    });

    criterion(4, "Maslov and Conley-Zehnder indices", [](Checker& c) {
        std::mt19937_64 rng(1234);
        std::uniform_int_distribution<int> num(1, 40), den(2, 9);
        int done = 0;
        while (done < 50) {
            Rational a(num(rng), den(rng));
            if (is_integer(a)) continue;
            BigInt expected = 1 + 2 * rational_floor(a);
            c.expect(crossing_index(AnglePath::linear(a)) == Rational(expected),
                     "crossing index mismatch at a = " + rational_to_string(a));
            ++done;
        }
        for (int m = 1; m <= 10; ++m)
            c.expect(crossing_index(AnglePath::linear(Rational(m))) == Rational(2 * m),
                     "loop index != 2m at m = " + std::to_string(m));

        std::uniform_int_distribution<int> n_dist(2, 5), pnum(1, 12), pden(1, 5);
        done = 0;
        while (done < 200) {
            const int n = n_dist(rng);
            std::vector<Rational> a;
            for (int i = 0; i < n; ++i) a.push_back(Rational(pnum(rng), pden(rng)));
            std::uniform_int_distribution<int> j_dist(1, n);
            const auto j = static_cast<std::size_t>(j_dist(rng));
            try {
                BigInt cz = cz_ellipsoid_orbit(a, j);
                std::vector<Rational> slopes;
                for (std::size_t k = 0; k < a.size(); ++k)
                    if (k + 1 != j) slopes.push_back(a[j - 1] / a[k]);
                c.expect(Rational(cz) == crossing_index(AnglePath::linear(slopes)),
                         "cz formula disagrees with the crossing-form oracle");
                ++done;
            } catch (const DegenerateRatio&) {
            }
        }

        // sorted ascending: the minimal orbit index is n - 1
        for (int n = 2; n <= 6; ++n) {
            std::vector<Rational> a;
            Rational prev(1);
            for (int i = 0; i < n; ++i) {
                prev += Rational(num(rng), den(rng)) + Rational(1, den(rng));
                a.push_back(prev);
            }
            std::optional<BigInt> best;
            bool degenerate = false;
            for (std::size_t j = 1; j <= a.size(); ++j) {
                try {
                    BigInt cz = cz_ellipsoid_orbit(a, j);
                    if (!best || cz < *best) best = cz;
                } catch (const DegenerateRatio&) {
                    degenerate = true;
                }
            }
            if (degenerate) continue;
            c.expect(*best == n - 1, "minimal orbit index != n-1 at n = " +
                                         std::to_string(n));
        }

        for (std::int64_t n = 1; n <= 10; ++n)
            c.expect(cz_round_sphere(n) == 2 * (n - 1), "round sphere index mismatch");
    });

    criterion(5, "Hochschild dimension tables of the double points", [](Checker& c) {
        for (std::int64_t k : {1, 2, 3, 5}) {
            const std::int64_t lo = -2 * (k + 1) * 3;
            auto t = hh_dimensions(a1(k), DegreeWindow{lo, 5});
            c.expect(t.complete, "table not complete for k = " + std::to_string(k));
            c.expect(t.dimension(3) == 2 * k - 1, "hh^3 != 2k-1 at k = " +
                                                      std::to_string(k));
            c.expect(t.dimension(2) == 0, "hh^2 != 0 at k = " + std::to_string(k));
            for (std::int64_t d = 4; d <= 5; ++d)
                c.expect(t.dimension(d) == 0,
                         "hh^" + std::to_string(d) + " != 0 at k = " + std::to_string(k));
            for (std::int64_t d = lo; d <= 1; ++d)
                c.expect(t.dimension(d) == 1, "hh^" + std::to_string(d) +
                                                  " != 1 at k = " + std::to_string(k));
        }
    });

    criterion(6, "bigrading values and pairwise contact distinction", [](Checker& c) {
        // degree -2: b0 = 1 for k = 1 and b0 = 2 for k >= 2
        c.expect(b0_of_unique_generator(a1(1), -2, c) == 1, "deg -2, k=1: b0 != 1");
        for (std::int64_t k = 2; k <= 6; ++k)
            c.expect(b0_of_unique_generator(a1(k), -2, c) == 2,
                     "deg -2, k=" + std::to_string(k) + ": b0 != 2");
        // degree -4: b0 = 4 (k=1), 3 (k=2), 4 (k >= 3)
        c.expect(b0_of_unique_generator(a1(1), -4, c) == 4, "deg -4, k=1: b0 != 4");
        c.expect(b0_of_unique_generator(a1(2), -4, c) == 3, "deg -4, k=2: b0 != 3");
        for (std::int64_t k = 3; k <= 6; ++k)
            c.expect(b0_of_unique_generator(a1(k), -4, c) == 4,
                     "deg -4, k=" + std::to_string(k) + ": b0 != 4");
        // degree -2k: b0 = 2k-1 for A1(2k), and 2k for every A1(2K), K > k
        for (std::int64_t k = 1; k <= 6; ++k) {
            c.expect(b0_of_unique_generator(a1(k), -2 * k, c) == 2 * k - 1,
                     "deg -2k, k=" + std::to_string(k) + ": b0 != 2k-1");
            for (std::int64_t bigk = k + 1; bigk <= 6; ++bigk)
                c.expect(b0_of_unique_generator(a1(bigk), -2 * k, c) == 2 * k,
                         "deg -2k of A1(2K), k=" + std::to_string(k) +
                             ", K=" + std::to_string(bigk) + ": b0 != 2k");
        }
        for (std::int64_t k = 1; k <= 6; ++k)
            for (std::int64_t bigk = k + 1; bigk <= 6; ++bigk) {
                auto v = contact_distinguish(a1(k), a1(bigk),
                                             DegreeWindow{-2 * bigk - 2, -1});
                c.expect(v.distinct, "A1(" + std::to_string(2 * k) + ") vs A1(" +
                                         std::to_string(2 * bigk) +
                                         ") not distinguished");
            }
    });

    criterion(7, "fast enumeration equals the box brute force", [](Checker& c) {
        for (auto a : {std::vector<std::int64_t>{2, 2, 2, 2}, {2, 2, 2, 4}, {2, 2, 3}}) {
            DiagonalSingularity s(a);
            c.expect(testing::fast_pairs(s, 10) == testing::oracle_pairs(s, 10),
                     "oracle mismatch");
        }
    });

    criterion(8, "small resolution criteria and the three-way cross-check",
              [](Checker& c) {
                  c.expect(coxeter_number(make_du_val('A', 1)) == 2, "A1");
                  c.expect(coxeter_number(make_du_val('A', 5)) == 6, "A5");
                  c.expect(coxeter_number(make_du_val('D', 4)) == 6, "D4");
                  c.expect(coxeter_number(make_du_val('D', 7)) == 12, "D7");
                  c.expect(coxeter_number(make_du_val('E', 6)) == 12, "E6");
                  c.expect(coxeter_number(make_du_val('E', 7)) == 18, "E7");
                  c.expect(coxeter_number(make_du_val('E', 8)) == 30, "E8");
                  for (std::int64_t n = 1; n <= 6; ++n)
                      for (std::int64_t k = 1; k <= 3; ++k) {
                          auto fa = PlaneCurveFactorization(
                              {FactorBinomial{n + 1, k * (n + 1)}});
                          c.expect(katz_small_res(fa).exceptional_curves == n,
                                   "family (a) mismatch");
                          if (n >= 2) {
                              auto fb = PlaneCurveFactorization(
                                  {FactorVarZ{}, FactorVarT{},
                                   FactorBinomial{n - 1, k * (n - 1)}});
                              c.expect(katz_small_res(fb).exceptional_curves == n,
                                       "family (b) mismatch");
                          }
                      }
                  for (std::int64_t m = 2; m <= 24; ++m)
                      for (std::int64_t n = 2; n <= 24; ++n) {
                          auto r = cross_check(DiagonalSingularity({2, 2, m, n}));
                          c.expect(r.agree, "cross-check disagreement at (2,2," +
                                                std::to_string(m) + "," +
                                                std::to_string(n) + ")");
                      }
              });

    criterion(9, "bridge hygiene of the sh relabeling", [](Checker& c) {
        auto refused = sh_via_hh(DiagonalSingularity({3, 3, 3}), DegreeWindow{-6, 5}, 8);
        c.expect(!refused.accepted && refused.refusal.find("amplitude") != std::string::npos,
                 "(3,3,3) was not refused on amplitude");
        for (std::int64_t k = 1; k <= 5; ++k) {
            auto ok = sh_via_hh(a1(k), DegreeWindow{-10, 5});
            c.expect(ok.accepted, "A1(2k) not accepted at k = " + std::to_string(k));
            if (ok.accepted)
                c.expect(ok.table->dimension(3) == 2 * k - 1,
                         "sh^3 rank != mu at k = " + std::to_string(k));
        }
    });

    criterion(10, "property suites", [](Checker& c) {
        // Smith normal form: unimodularity, product and divisibility
        std::mt19937_64 rng(987654321);
        std::uniform_int_distribution<int> dim(1, 12), entry(-9, 9);
        for (int trial = 0; trial < 500; ++trial) {
            IntegerMatrix m(dim(rng), dim(rng));
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
            auto f = smith_normal_form(m);
            if (!smith_form_is_valid(m, f)) {
                c.expect(false, "invalid Smith form at trial " + std::to_string(trial));
                break;
            }
        }

        // cyclotomic route vs matrix route for every sorted tuple with mu <= 64
        std::vector<std::vector<std::int64_t>> family;
        std::vector<std::int64_t> cur;
        auto rec = [&](auto&& self, std::int64_t mu, std::int64_t lo) -> void {
            if (!cur.empty()) family.push_back(cur);
            if (cur.size() == 6) return;
            for (std::int64_t a = lo; (a - 1) * mu <= 64; ++a) {
                cur.push_back(a);
                self(self, mu * (a - 1), a);
                cur.pop_back();
            }
        };
        rec(rec, 1, 2);
        for (const auto& a : family) {
            DiagonalSingularity s(a);
            auto m = integral_monodromy(s);
            if (expand_char_poly(char_poly(s)) != characteristic_polynomial(m)) {
                c.expect(false, "char poly route mismatch");
                break;
            }
        }

        // Maslov additivity and loop doubling on 100 random paths each
        std::uniform_int_distribution<int> num(-6, 6), den(1, 4), coords(1, 3);
        int done = 0;
        while (done < 100) {
            Rational start(num(rng), den(rng)), mid(num(rng), den(rng)),
                end(num(rng), den(rng));
            AnglePath p1({{{Rational(0), start}, {Rational(1), mid}}});
            AnglePath p2({{{Rational(0), mid}, {Rational(1), end}}});
            try {
                c.expect(crossing_index(p1.concatenate(p2)) ==
                             crossing_index(p1) + crossing_index(p2),
                         "concatenation additivity failed");
                ++done;
            } catch (const DegenerateCrossing&) {
            }
        }
        done = 0;
        while (done < 100) {
            std::vector<Rational> w;
            for (int i = coords(rng); i > 0; --i) {
                int m = num(rng);
                w.push_back(Rational(m == 0 ? 1 : m));
            }
            AnglePath loop = AnglePath::linear(w);
            c.expect(crossing_index(loop) == Rational(2 * loop_maslov(loop)),
                     "loop doubling failed");
            ++done;
        }
    });

    std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
