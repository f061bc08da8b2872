// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion pins its tolerances and its runtime budget in code.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "schottky/examples.hpp"
#include "schottky/schottky.hpp"

using namespace schottky;

namespace {

struct Criterion {
    std::string summary;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

Signature tuple_signature(const SixTuple& t) {
    Signature s;
    s.n = 2;
    s.a1 = t[0];
    s.t2_orders.assign(t[1], 2);
    s.t3_orders.assign(t[2], 4);
    s.t4_orders.assign(t[3], 2);
    s.t5_orders.assign(t[4], 4);
    s.a6 = t[5];
    return s;
}

// ---- criterion 1: census ground truth ----
bool census_ground_truth(std::string& detail) {
    if (count_Xg(1) != 3 || count_Xg(2) != 1) {
        detail = "X_1 or X_2 count wrong";
        return false;
    }
    std::vector<SixTuple> expected = {
        {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 0, 0}};
    if (enumerate_Xg(1) != expected) {
        detail = "rank-1 tuple set differs";
        return false;
    }
    return true;
}

// ---- criterion 2: closed form vs brute force, g <= 200 ----
bool counting_closed_forms(std::string& detail) {
    for (int g = 1; g <= 200; ++g) {
        for (int alpha = 0; 4 * alpha <= g + 3; ++alpha) {
            long closed = count_Ng_alpha(g, alpha);
            long brute = count_Ng_alpha_bruteforce(g, alpha);
            if (closed != brute) {
                detail = "N_" + std::to_string(g) + "(" + std::to_string(alpha) +
                         "): closed " + std::to_string(closed) + " vs brute " +
                         std::to_string(brute);
                return false;
            }
        }
        long cx = count_Xg(g);
        if (cx != count_Xg_bruteforce(g) ||
            cx != static_cast<long>(enumerate_Xg(g).size())) {
            detail = "X_" + std::to_string(g) + " counts disagree";
            return false;
        }
    }
    return true;
}

// ---- criterion 3: rank cross-validation ----
bool rank_cross_validation(std::string& detail) {
    for (int g = 1; g <= 20; ++g) {
        for (const SixTuple& t : enumerate_Xg(g)) {
            Signature s = tuple_signature(t);
            if (rank(s) != g || rank_closed_form(s) != g) {
                detail = "n=2 tuple at rank " + std::to_string(g) + " disagrees";
                return false;
            }
        }
    }
    Rng rng(20260809);
    const int ns[3] = {3, 5, 7};
    int accepted = 0;
    while (accepted < 500) {
        Signature s;
        s.n = ns[rng.uniform_int(0, 2)];
        s.a0 = rng.uniform_int(0, 2);
        s.a1 = rng.uniform_int(0, 2);
        int c2 = rng.uniform_int(0, 2), c3 = rng.uniform_int(0, 2);
        int c4 = rng.uniform_int(0, 1), c5 = rng.uniform_int(0, 1);
        for (int k = 0; k < c2; ++k) s.t2_orders.push_back(s.n);
        for (int k = 0; k < c3; ++k)
            s.t3_orders.push_back(rng.uniform_int(0, 1) == 0 ? 2 : 2 * s.n);
        for (int k = 0; k < c4; ++k) s.t4_orders.push_back(s.n);
        for (int k = 0; k < c5; ++k)
            s.t5_orders.push_back(rng.uniform_int(0, 1) == 0 ? 2 : 2 * s.n);
        if (!is_admissible(s).admissible) continue;
        ++accepted;
        long r = rank(s);
        if (r != genus_from_orbifold(s) || r != rank_closed_form(s)) {
            detail = "odd-n sample " + std::to_string(accepted) + " disagrees";
            return false;
        }
    }
    return true;
}

// ---- criterion 4: admissibility equals epimorphism existence ----
std::vector<Signature> atom_signatures(int n) {
    std::vector<Signature> atoms;
    auto push = [&](auto mutate) {
        Signature s;
        s.n = n;
        mutate(s);
        atoms.push_back(s);
    };
    push([](Signature& s) { s.a0 = 1; });
    push([](Signature& s) { s.a1 = 1; });
    for (int l = 2; l <= n; ++l)
        if (n % l == 0) {
            push([l](Signature& s) { s.t2_orders = {l}; });
            push([l](Signature& s) { s.t4_orders = {l}; });
        }
    for (int m = 2; m <= 2 * n; ++m)
        if ((2 * n) % m == 0 && n % m != 0) {
            push([m](Signature& s) { s.t3_orders = {m}; });
            push([m](Signature& s) { s.t5_orders = {m}; });
        }
    if (n % 2 == 0) push([](Signature& s) { s.a6 = 1; });
    if (n % 2 == 1) {
        push([](Signature& s) { s.a7 = 1; });
        // T8 factors with up to two cyclic parts in F
        std::vector<std::vector<int>> orders_options = {{}};
        for (int l = 2; l <= n; ++l)
            if (n % l == 0) {
                orders_options.push_back({l});
                for (int l2 = l; l2 <= n; ++l2)
                    if (n % l2 == 0) orders_options.push_back({l, l2});
            }
        for (const std::vector<int>& orders : orders_options)
            for (int lox = 0; lox + static_cast<int>(orders.size()) <= 2; ++lox) {
                T8Sub f{orders, lox, false};
                f.has_glide = f.glide_implied();
                push([f](Signature& s) { s.t8 = {f}; });
            }
    }
    return atoms;
}

Signature merge(Signature a, const Signature& b) {
    a.a0 += b.a0;
    a.a1 += b.a1;
    a.a6 += b.a6;
    a.a7 += b.a7;
    a.t2_orders.insert(a.t2_orders.end(), b.t2_orders.begin(), b.t2_orders.end());
    a.t3_orders.insert(a.t3_orders.end(), b.t3_orders.begin(), b.t3_orders.end());
    a.t4_orders.insert(a.t4_orders.end(), b.t4_orders.begin(), b.t4_orders.end());
    a.t5_orders.insert(a.t5_orders.end(), b.t5_orders.begin(), b.t5_orders.end());
    a.t8.insert(a.t8.end(), b.t8.begin(), b.t8.end());
    return a;
}

bool admissibility_equivalence(std::string& detail) {
    long checked = 0;
    for (int n = 1; n <= 6; ++n) {
        std::vector<Signature> atoms = atom_signatures(n);
        const int k = static_cast<int>(atoms.size());
        // multisets of 1..5 atoms
        std::function<bool(int, int, const Signature&)> sweep =
            [&](int start, int left, const Signature& acc) -> bool {
            if (acc.factor_count() > 0) {
                bool admissible = is_admissible(acc).admissible;
                bool has_epi = find_epimorphism(acc).has_value();
                ++checked;
                if (admissible != has_epi) {
                    detail = "n=" + std::to_string(n) + ": signature with " +
                             std::to_string(acc.factor_count()) +
                             " factors disagrees (admissible=" +
                             std::to_string(admissible) + ")";
                    return false;
                }
            }
            if (left == 0) return true;
            for (int i = start; i < k; ++i)
                if (!sweep(i, left - 1, merge(acc, atoms[i]))) return false;
            return true;
        };
        Signature empty;
        empty.n = n;
        if (!sweep(0, 5, empty)) return false;
    }
    detail = std::to_string(checked) + " signatures checked";
    return true;
}

// ---- criterion 5: reference fixtures ----
bool paper_fixtures(std::string& detail) {
    std::vector<ExampleRow> rows = reproduce_examples(0);
    for (const ExampleRow& r : rows)
        if (!r.pass) {
            detail = "[" + r.fixture + "] " + r.claim;
            return false;
        }
    detail = std::to_string(rows.size()) + " fixture rows";
    return true;
}

// ---- criterion 6: ping-pong / freeness / nesting / limit containment ----
bool ping_pong_suite(std::string& detail) {
    Signature rank2;
    rank2.n = 2;
    rank2.t2_orders = {2};
    rank2.t3_orders = {4};
    std::vector<std::pair<std::string, GroupAssembly>> fixtures;
    fixtures.emplace_back("K1", free_product({make_basic({BasicKind::T1, 2.0, 0, {}}, 2)}));
    fixtures.emplace_back("K2", free_product({make_basic({BasicKind::T6, 2.0, 0, {}}, 2)}));
    fixtures.emplace_back("K3", free_product({make_basic({BasicKind::T5, 9.0, 4, {}}, 2)}));
    fixtures.emplace_back("rank2", realize(rank2));
    for (const auto& [name, a] : fixtures) {
        VerificationReport rep = verify_ping_pong(a, 8);
        if (!rep.passed()) {
            detail = name + ": " + rep.findings.front().code + " " +
                     rep.findings.front().detail;
            return false;
        }
        bool words_ok = true;
        for_each_reduced_word(a, 8, [&](const Word& w) {
            if (identity_distance(w.value) <= 1e-6) words_ok = false;
        });
        if (!words_ok) {
            detail = name + ": a reduced word of length <= 8 is numerically trivial";
            return false;
        }
        std::vector<Disc> initial = initial_discs(a);
        for (const LimitPoint& p : sample_limit_set(a, 6)) {
            bool inside = false;
            for (const Disc& d : initial) inside = inside || contains(d, p.point, 1e-9);
            if (!inside) {
                detail = name + ": limit point of " + p.word + " escapes the initial discs";
                return false;
            }
        }
        std::vector<Finding> nest = check_nesting(a, 6);
        if (!nest.empty()) {
            detail = name + ": " + nest.front().detail;
            return false;
        }
    }
    return true;
}

// ---- criterion 7: classification invariance ----
bool classification_invariance(std::string& detail) {
    std::vector<ExtendedMoebius> fixtures = {
        identity_map(),
        make_map(Complex(0, 1), 0, 0, 1, false), // elliptic
        make_map(1, 1, 0, 1, false),             // parabolic
        make_map(4, 0, 0, 1, false),             // loxodromic
        conjugation_map(),                       // reflection
        make_map(0, -1, 1, 0, true),             // imaginary reflection
        make_map(0, Complex(0, 1), 1, 0, true),  // pseudo-elliptic
        make_map(2, 0, 0, 1, true),              // glide-reflection
        make_map(1, 1, 0, 1, true)};             // pseudo-parabolic
    Rng rng(0);
    for (int k = 0; k < 200; ++k) {
        ExtendedMoebius g = random_conformal(rng);
        ExtendedMoebius gi = inverse(g);
        for (const ExtendedMoebius& t : fixtures) {
            if (classify(compose(compose(g, t), gi)).tag != classify(t).tag) {
                detail = "conjugation " + std::to_string(k) + " changed a tag";
                return false;
            }
        }
    }
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"census ground truth: #X_1 = 3, #X_2 = 1, exact rank-1 tuples", 1.0,
         census_ground_truth},
        {"closed-form counts vs brute force for all g <= 200 and all alpha", 30.0,
         counting_closed_forms},
        {"rank: Euler characteristic vs closed forms (n=2 exhaustive to rank 20; "
         "500 seeded odd-n samples)",
         30.0, rank_cross_validation},
        {"admissibility equals epimorphism existence (exhaustive n <= 6, <= 5 factors)",
         120.0, admissibility_equivalence},
        {"reference fixtures reproduce their documented behaviour", 1.0, paper_fixtures},
        {"ping-pong, freeness to depth 8, nesting and limit containment on the four "
         "fixtures",
         120.0, ping_pong_suite},
        {"classification tags invariant under 200 random conformal conjugations", 1.0,
         classification_invariance},
    };
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                             .count();
        if (seconds > criteria[i].budget_seconds) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("over the ") +
                      std::to_string(criteria[i].budget_seconds) + " s budget";
        }
        std::printf("%s  criterion %zu: %s [%.2f s]%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].summary.c_str(), seconds, detail.empty() ? "" : " -- ",
                    detail.c_str());
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
