#include <grwalk/acceptance.hpp>

#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include <grwalk/graph_io.hpp>
#include <grwalk/periodicity.hpp>
#include <grwalk/search.hpp>

namespace grwalk {

namespace {

struct Criterion {
    std::string label;
    std::function<bool(std::ostream&)> check;
};

struct NamedGraph {
    std::string name;
    Graph graph;
};

std::vector<NamedGraph> corpus() {
    std::vector<NamedGraph> out;
    for (int n = 2; n <= 5; ++n)
        out.push_back({"K" + std::to_string(n), complete_graph(n)});
    for (int n = 3; n <= 8; ++n)
        out.push_back({"C" + std::to_string(n), cycle_graph(n)});
    out.push_back({"K_{2,2}", complete_multipartite_graph({2, 2})});
    out.push_back({"K_{3,3}", complete_multipartite_graph({3, 3})});
    out.push_back({"K_{2,2,2}", complete_multipartite_graph({2, 2, 2})});
    out.push_back({"H(2,2)", hamming_graph(2, 2)});
    out.push_back({"H(2,3)", hamming_graph(2, 3)});
    out.push_back({"J(4,2)", johnson_graph(4, 2)});
    out.push_back({"Petersen", petersen_graph()});
    return out;
}

IntersectionArray random_array(std::mt19937_64& rng) {
    auto uniform = [&](long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng);
    };
    const int d = static_cast<int>(uniform(1, 6));
    const long long k = d == 1 ? uniform(1, 10) : uniform(2, 10);
    std::vector<long long> b{k};
    std::vector<long long> c{1};
    for (int j = 1; j < d; ++j) {
        b.push_back(uniform(1, k - c.back()));
        c.push_back(uniform(1, j + 1 < d ? k - 1 : k));
    }
    return IntersectionArray(std::move(b), std::move(c));
}

bool expect_period(std::ostream& out, const std::string& name, const Graph& g,
                   long expected) {
    const PeriodicityVerdict v = is_periodic_unitary(g);
    if (v.periodic && v.period && *v.period == expected)
        return true;
    out << "      " << name << ": expected period " << expected << ", got "
        << (v.period ? to_string(*v.period) : std::string("none")) << "\n";
    return false;
}

IntPoly product_of_factors(const std::vector<unsigned>& factors) {
    IntPoly p = IntPoly::one();
    for (unsigned n : factors)
        p = p * cyclotomic(n);
    return p;
}

} // namespace

int run_acceptance(const std::string& suite, std::ostream& out) {
    if (suite != "all" && suite != "fast")
        throw InvalidParamsError("unknown suite '" + suite + "' (expected all or fast)");
    const int samples = suite == "all" ? 500 : 150;

    std::vector<Criterion> criteria;

    criteria.push_back({"exact walk periods: C5 -> 5, K_{k,k} -> 4 (k=2..4), K_{m,m,m} -> 12 (m=2,3)",
                        [](std::ostream& log) {
                            bool ok = expect_period(log, "C5", cycle_graph(5), 5);
                            for (int k = 2; k <= 4; ++k)
                                ok &= expect_period(log, "K_{" + std::to_string(k) + "," + std::to_string(k) + "}",
                                                    complete_multipartite_graph({k, k}), 4);
                            for (int m = 2; m <= 3; ++m)
                                ok &= expect_period(log, "K_{m,m,m}, m=" + std::to_string(m),
                                                    complete_multipartite_graph({m, m, m}), 12);
                            return ok;
                        }});

    criteria.push_back({"hamming scan d=1..6, q=2..12 finds exactly {(1,2),(1,3),(2,2),(3,3),(4,2)}",
                        [](std::ostream& log) {
                            const SearchReport rep = search_hamming({1, 6}, {2, 12});
                            if (!rep.matches_expected) {
                                log << "      survivors differ from the expected set\n";
                                return false;
                            }
                            for (const auto& row : rep.rows)
                                if (row.periodic && !row.confirmed_by_unitary) {
                                    log << "      survivor (" << row.params[0] << ","
                                        << row.params[1] << ") not confirmed by the walk operator\n";
                                    return false;
                                }
                            return true;
                        }});

    criteria.push_back({"johnson scan n=2..12, k=1..6 finds exactly {(2,1),(3,1),(4,2)} after folding",
                        [](std::ostream& log) {
                            const SearchReport rep = search_johnson({2, 12}, {1, 6});
                            if (!rep.matches_expected)
                                log << "      survivors differ from the expected set\n";
                            return rep.matches_expected;
                        }});

    criteria.push_back({"quotient transforms: {2k,k,0,k} -> z^6-z^4-z^2+1, {3m,2m,m,2m} -> z^6-z^5+z^4-2z^3+z^2-z+1",
                        [](std::ostream& log) {
                            const IntPoly bip({1, 0, -1, 0, -1, 0, 1});
                            const IntPoly tri({1, -1, 1, -2, 1, -1, 1});
                            bool ok = true;
                            for (long long k = 2; k <= 4; ++k) {
                                const RatPoly psi =
                                    zhukovskij_transform(quotient_charpoly(srg_array(2 * k, k, 0, k)));
                                auto ip = try_to_int_poly(psi);
                                if (!ip || *ip != bip) {
                                    log << "      k=" << k << ": transform " << psi.str("z") << "\n";
                                    ok = false;
                                    continue;
                                }
                                const auto cert = is_cyclotomic_product(*ip);
                                if (!cert || product_of_factors(cert->factors) != *ip) {
                                    log << "      k=" << k << ": certificate does not multiply back\n";
                                    ok = false;
                                }
                            }
                            for (long long m = 2; m <= 4; ++m) {
                                const RatPoly psi = zhukovskij_transform(
                                    quotient_charpoly(srg_array(3 * m, 2 * m, m, 2 * m)));
                                auto ip = try_to_int_poly(psi);
                                if (!ip || *ip != tri) {
                                    log << "      m=" << m << ": transform " << psi.str("z") << "\n";
                                    ok = false;
                                    continue;
                                }
                                const auto cert = is_cyclotomic_product(*ip);
                                if (!cert) {
                                    log << "      m=" << m << ": no cyclotomic certificate\n";
                                    ok = false;
                                    continue;
                                }
                                for (unsigned f : cert->factors)
                                    if (12 % f != 0) {
                                        log << "      m=" << m << ": factor order " << f
                                            << " does not divide 12\n";
                                        ok = false;
                                    }
                            }
                            return ok;
                        }});

    criteria.push_back({"closed-form transform coefficients (1,0,-1,0,-1,0,1) and (1,-1,1,-2,1,-1,1)",
                        [](std::ostream& log) {
                            auto check = [&](const IntersectionArray& arr,
                                             const std::vector<long>& expect) {
                                const auto alpha =
                                    zhukovskij_coefficients(quotient_charpoly(arr).coeffs());
                                if (alpha.size() != expect.size())
                                    return false;
                                for (std::size_t i = 0; i < expect.size(); ++i)
                                    if (alpha[i] != expect[i])
                                        return false;
                                return true;
                            };
                            bool ok = true;
                            if (!check(srg_array(6, 3, 0, 3), {1, 0, -1, 0, -1, 0, 1})) {
                                log << "      bipartite quotient coefficients differ\n";
                                ok = false;
                            }
                            if (!check(srg_array(6, 4, 2, 4), {1, -1, 1, -2, 1, -1, 1})) {
                                log << "      tripartite quotient coefficients differ\n";
                                ok = false;
                            }
                            return ok;
                        }});

    criteria.push_back({"integrality filter failure forces a negative quotient verdict ("
                            + std::to_string(samples) + " random arrays)",
                        [samples](std::ostream& log) {
                            std::mt19937_64 rng(0x5eed0001);
                            for (int i = 0; i < samples; ++i) {
                                const IntersectionArray arr = random_array(rng);
                                const CoefficientReport rep = coefficient_integrality_filter(arr);
                                if (!rep.pass && drg_periodicity(arr).periodic) {
                                    log << "      counterexample " << arr.str() << "\n";
                                    return false;
                                }
                            }
                            return true;
                        }});

    criteria.push_back({"closed-form transform coefficients match the expanded transform ("
                            + std::to_string(samples) + " random arrays)",
                        [samples](std::ostream& log) {
                            std::mt19937_64 rng(0x5eed0002);
                            for (int i = 0; i < samples; ++i) {
                                const IntersectionArray arr = random_array(rng);
                                const RatPoly phi = quotient_charpoly(arr);
                                const auto alpha = zhukovskij_coefficients(phi.coeffs());
                                const RatPoly psi = zhukovskij_transform(phi);
                                if (static_cast<int>(alpha.size()) != psi.degree() + 1) {
                                    log << "      degree mismatch for " << arr.str() << "\n";
                                    return false;
                                }
                                for (std::size_t j = 0; j < alpha.size(); ++j) {
                                    if (alpha[j] != psi.coeff(static_cast<int>(j))) {
                                        log << "      coefficient mismatch for " << arr.str()
                                            << " at z^" << j << "\n";
                                        return false;
                                    }
                                    if (alpha[j] != alpha[alpha.size() - 1 - j]) {
                                        log << "      palindrome broken for " << arr.str() << "\n";
                                        return false;
                                    }
                                }
                            }
                            return true;
                        }});

    criteria.push_back({"walk-operator and spectral routes agree on periodicity across the corpus",
                        [](std::ostream& log) {
                            bool ok = true;
                            for (const auto& [name, g] : corpus()) {
                                const bool a = is_periodic_unitary(g).periodic;
                                const bool b = is_periodic_spectral(g).periodic;
                                if (a != b) {
                                    log << "      " << name << ": unitary says " << a
                                        << ", spectral says " << b << "\n";
                                    ok = false;
                                }
                            }
                            return ok;
                        }});

    criteria.push_back({"periodic corpus graphs with rational spectra satisfy the eigenvalue/diameter bounds",
                        [](std::ostream& log) {
                            bool ok = true;
                            for (const auto& [name, g] : corpus()) {
                                const RationalSpectrumReport rep = rational_spectrum_check(g);
                                if (!rep.applicable)
                                    continue;
                                if (!*rep.values_allowed || !*rep.count_bounded ||
                                    !*rep.diameter_bounded) {
                                    log << "      " << name << " violates a bound\n";
                                    ok = false;
                                }
                            }
                            return ok;
                        }});

    criteria.push_back({"diameter < number of distinct transition eigenvalues across the corpus",
                        [](std::ostream& log) {
                            bool ok = true;
                            for (const auto& [name, g] : corpus()) {
                                const int n_t =
                                    minimal_polynomial(transition_matrix(g)).distinct_eigenvalue_count;
                                if (!(diameter(g) < n_t)) {
                                    log << "      " << name << ": diameter " << diameter(g)
                                        << " not below " << n_t << "\n";
                                    ok = false;
                                }
                            }
                            return ok;
                        }});

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::ostringstream log;
        const bool ok = criteria[i].check(log);
        if (!ok)
            ++failures;
        out << "[" << std::setw(2) << (i + 1) << "/" << criteria.size() << "] "
            << (ok ? "PASS" : "FAIL") << "  " << criteria[i].label << "\n";
        out << log.str();
    }
    out << (failures == 0 ? "RESULT: all criteria passed"
                          : "RESULT: " + std::to_string(failures) + " criteria failed")
        << " (suite " << suite << ")\n";
    return failures;
}

} // namespace grwalk
