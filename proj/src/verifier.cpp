#include "seacalc/verifier.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "seacalc/b_expansion.hpp"
#include "seacalc/combinatorics.hpp"

namespace seacalc {

bool Witness::residual_is_zero() const {
    if (!residual) return true;
    return std::visit([](const auto& p) { return p.is_zero(); }, *residual);
}

bool Witness::passed() const {
    switch (expect) {
        case Expect::Context: return true;
        case Expect::Zero: return failures.empty() && residual_is_zero();
        case Expect::Nonzero: return failures.empty() && !residual_is_zero();
    }
    return false;
}

void VerifyReport::finalize() { passed = failed_count() == 0; }

std::size_t VerifyReport::failed_count() const {
    std::size_t n = 0;
    for (const auto& w : witnesses) n += !w.passed();
    return n;
}

namespace {

Witness zero_witness(std::string label, Residual residual) {
    Witness w;
    w.label = std::move(label);
    w.residual = std::move(residual);
    return w;
}

Witness failures_witness(std::string label, std::vector<std::string> failures) {
    Witness w;
    w.label = std::move(label);
    w.failures = std::move(failures);
    return w;
}

VerifyReport make_report(std::string name, int order, std::vector<Witness> witnesses) {
    VerifyReport r;
    r.suite_name = std::move(name);
    r.order = order;
    r.witnesses = std::move(witnesses);
    r.finalize();
    return r;
}

std::string at_order(const std::string& what, int order) { return what + " [order " + std::to_string(order) + "]"; }

PkPoly commutator(const PkPoly& a, const PkPoly& b) { return a * b - b * a; }

std::vector<std::string> even_count_violations(const PkPoly& poly, Letter letter, const std::string& name) {
    std::vector<std::string> out;
    for (const auto& [w, c] : poly.terms()) {
        if (w.count(letter) % 2 != 0) {
            out.push_back(name + ": word " + w.str() + " has an odd number of " + letter_char(letter));
        }
    }
    return out;
}

std::vector<std::string> even_p_violations(const PkPoly& poly, const std::string& name) {
    return even_count_violations(poly, Letter::P, name);
}

}  // namespace

VerifyReport check_idempotence(const SeriesBuilder& builder, int order) {
    std::vector<Witness> ws;
    for (int n = 0; n <= order; n += 2) {
        const PkPoly p = builder.P_checked(n);
        ws.push_back(zero_witness(at_order("P*P - P (normalized wrappers)", n), p * p - p));
    }
    const PkPoly plain = builder.to_plain(builder.P_checked(order));
    ws.push_back(zero_witness(at_order("P*P - P (plain wrappers)", order), builder.plain_product(plain, plain) - plain));
    return make_report("idempotence", order, std::move(ws));
}

VerifyReport check_t_not_idempotent(const SeriesBuilder& builder) {
    std::vector<Witness> ws;
    const PkPoly t2 = builder.t_checked(2);
    Witness main = zero_witness("t*t - t is nonzero [order 2]", t2 * t2 - t2);
    main.expect = Expect::Nonzero;
    ws.push_back(std::move(main));

    const PkPoly t0 = builder.t_checked(0);
    Witness vacuum = zero_witness("t*t - t [order 0]", t0 * t0 - t0);
    vacuum.expect = Expect::Context;
    ws.push_back(std::move(vacuum));

    Witness tyt = zero_witness("t*Y*t - t*t [order 2]", builder.P_checked_tYt(2) - t2 * t2);
    tyt.expect = Expect::Context;
    ws.push_back(std::move(tyt));
    return make_report("t-not-idempotent", 2, std::move(ws));
}

VerifyReport check_route_equivalence(const SeriesBuilder& builder, int order_pk, int order_b) {
    std::vector<Witness> ws;
    const PkPoly closed = builder.kres_closed(order_pk);
    ws.push_back(zero_witness(at_order("ktilde^res: flow route - closed form", order_pk),
                              builder.kres_flow(order_pk) - closed));
    for (int n = 0; n <= order_pk; n += 2) {
        ws.push_back(zero_witness(at_order("ktilde^res: sum_l f_{l,r} S(l) - closed form", n),
                                  builder.kres_from_S(n) - closed.truncated(n)));
    }

    const PkPoly p36 = builder.P_checked(order_pk);
    ws.push_back(zero_witness(at_order("P: (p - ptildeY ktilde)/2 - t Y t", order_pk),
                              p36 - builder.P_checked_tYt(order_pk)));
    ws.push_back(zero_witness(at_order("P: (p - ptildeY ktilde)/2 - (ptilde^res - ktilde^res)/2", order_pk),
                              builder.to_plain(p36) - builder.P_from_res(order_pk)));

    ws.push_back(zero_witness(at_order("ktilde: single sum - normalized core", order_pk),
                              builder.ktilde_direct(order_pk) - builder.canonical(SeriesId::Ktilde, order_pk)));
    ws.push_back(zero_witness(at_order("ptilde^res: single sum - N p N", order_pk),
                              builder.pres_direct(order_pk) - builder.pres_from_normalizer(order_pk)));

    ws.push_back(zero_witness(at_order("ktilde expanded: single sum - normalized core", order_b),
                              expand_direct(builder, SeriesId::Ktilde, order_b) -
                                  expand_named(builder, SeriesId::Ktilde, order_b)));
    ws.push_back(zero_witness(at_order("ptilde^res expanded: single sum - N p N", order_b),
                              expand_direct(builder, SeriesId::PtildeRes, order_b) -
                                  expand_named(builder, SeriesId::PtildeRes, order_b)));
    return make_report("routes", order_pk, std::move(ws));
}

VerifyReport check_res_algebra(const SeriesBuilder& builder, int order) {
    const PkPoly pr = builder.pres_direct(order);
    const PkPoly kr = builder.kres_closed(order);
    std::vector<Witness> ws;
    ws.push_back(zero_witness(at_order("ptilde^res ktilde^res - ktilde^res", order), builder.plain_product(pr, kr) - kr));
    ws.push_back(zero_witness(at_order("ktilde^res ptilde^res - ktilde^res", order), builder.plain_product(kr, pr) - kr));
    ws.push_back(zero_witness(at_order("ptilde^res ptilde^res - ptilde^res", order), builder.plain_product(pr, pr) - pr));
    ws.push_back(zero_witness(at_order("ktilde^res ktilde^res - ptilde^res", order), builder.plain_product(kr, kr) - pr));
    return make_report("res-algebra", order, std::move(ws));
}

VerifyReport check_defining_relations(const SeriesBuilder& builder, int order) {
    const PkPoly p = identity_poly(order);
    const PkPoly x = builder.series_X(order);
    const PkPoly u = p + x;
    const PkPoly y = builder.series_Y(order);
    const PkPoly pt = builder.ptilde_checked(order);
    const PkPoly kt = builder.ktilde_checked(order);
    const PkPoly pty = builder.series_ptildeY(order);
    const PkPoly pa = p + builder.series_A(order);

    std::vector<Witness> ws;
    ws.push_back(zero_witness(at_order("ptilde^2 - (p + X)", order), pt * pt - u));
    ws.push_back(zero_witness(at_order("(p + X) Y - p", order), u * y - p));
    ws.push_back(zero_witness(at_order("Y (p + X) - p", order), y * u - p));
    ws.push_back(zero_witness(at_order("(p + A)^2 - (p + pi^2 pbpbp)", order), pa * pa - builder.junction(order)));
    ws.push_back(zero_witness(at_order("ktilde^2 - (p + X)", order), kt * kt - u));
    ws.push_back(zero_witness(at_order("[ktilde, p + X]", order), commutator(kt, u)));
    ws.push_back(zero_witness(at_order("[ptilde, Y]", order), commutator(pt, y)));
    ws.push_back(zero_witness(at_order("[ptilde, ktilde]", order), commutator(pt, kt)));
    ws.push_back(zero_witness(at_order("[Y, ktilde]", order), commutator(y, kt)));
    ws.push_back(zero_witness(at_order("ptildeY - ptilde Y", order), pty - pt * y));
    ws.push_back(zero_witness(at_order("(ptildeY)^2 (p + X) - p", order), pty * pty * u - p));

    std::vector<std::string> parity;
    auto collect = [&parity](std::vector<std::string> found) {
        for (auto& v : found) parity.push_back(std::move(v));
    };
    collect(even_count_violations(x, Letter::K, "X"));
    collect(even_count_violations(y, Letter::K, "Y"));
    collect(even_count_violations(builder.series_A(order), Letter::K, "A"));
    collect(even_p_violations(builder.ktilde_direct(order), "ktilde"));
    collect(even_p_violations(builder.kres_closed(order), "ktilde^res"));
    if (!x.is_zero() && x.min_degree() < 2) parity.push_back("X has a term of b-degree below 2");
    ws.push_back(failures_witness(at_order("even number of k in X, Y, A; even number of p in ktilde, ktilde^res", order),
                                  std::move(parity)));
    return make_report("relations", order, std::move(ws));
}

std::vector<Occurrence> enumerate_S_occurrences(int l, int r) {
    if (l < 0 || r < 0) {
        throw std::invalid_argument("enumerate_S_occurrences: l and r must be >= 0");
    }
    const int target = 2 * r;
    std::vector<Occurrence> out;
    const PkWord p_word{Letter::P};
    const PkWord pbpbp = PkWord::parse("pbpbp");
    auto k_word = [](int beta) { return PkWord(std::vector<Letter>(2 * beta + 1, Letter::K)); };

    std::function<void(int, const PkWord&, int, int)> rec = [&](int factor, const PkWord& acc, int sign, int degree) {
        if (factor == 2 * l) {
            const int rest = target - degree;
            if (rest % 2 != 0) return;
            const int alpha = rest / 2;
            out.push_back({word_mul(acc, k_word(alpha)), alpha % 2 == 0 ? sign : -sign});
            return;
        }
        for (int beta = 0; degree + 2 * beta <= target; ++beta) {
            const PkWord chain = k_word(beta);
            const int beta_sign = beta % 2 == 0 ? sign : -sign;
            // branch p
            rec(factor + 1, word_mul(acc, word_mul(chain, p_word)), beta_sign, degree + 2 * beta);
            // branch pi^2 pbpbp (pi omitted)
            if (degree + 2 * beta + 2 <= target) {
                rec(factor + 1, word_mul(acc, word_mul(chain, pbpbp)), beta_sign, degree + 2 * beta + 2);
            }
        }
    };
    rec(0, p_word, 1, 0);
    return out;
}

VerifyReport check_occurrence_counts(const SeriesBuilder& builder, int r_max) {
    const CoefficientTable& table = builder.table();
    std::vector<Witness> ws;
    std::size_t total = 0;
    std::size_t literal_agree = 0;
    for (int r = 0; r <= r_max; ++r) {
        const int n = 2 * r + 1;
        for (int l = 0; l <= r; ++l) {
            std::map<PkWord, std::vector<int>> tally;
            for (auto& occ : enumerate_S_occurrences(l, r)) tally[occ.word].push_back(occ.sign);

            std::vector<std::string> failures;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                std::vector<Letter> letters(n);
                std::set<int> p_positions;
                for (int i = 0; i < n; ++i) {
                    const bool is_p = (mask >> i) & 1u;
                    letters[i] = is_p ? Letter::P : Letter::K;
                    if (is_p) p_positions.insert(i + 1);
                }
                const PkWord word(std::move(letters));
                const auto it = tally.find(word);
                const std::size_t count = it == tally.end() ? 0 : it->second.size();
                const int num_p = static_cast<int>(p_positions.size());
                if (num_p % 2 != 0) {
                    if (count != 0) failures.push_back(word.str() + ": odd number of p but appears " + std::to_string(count) + " times");
                    continue;
                }
                const int rho = num_p / 2;
                const BigInt expected = binomial(r + l - rho, l - rho);
                if (BigInt(count) != expected) {
                    failures.push_back(word.str() + ": appears " + std::to_string(count) + " times, expected " +
                                       expected.str());
                }
                if (count == 0) continue;
                const SubsetQ q(p_positions);
                const int expected_sign = table.sigma_sign(r, rho, q);
                long k_sum = 0;
                for (int i = 1; i <= n; ++i) k_sum += q.contains(i) ? 0 : i;
                const int k_sum_sign = k_sum % 2 == 0 ? 1 : -1;
                for (int s : it->second) {
                    ++total;
                    literal_agree += (s == k_sum_sign);
                    if (s != expected_sign) {
                        failures.push_back(word.str() + ": occurrence with sign " + std::to_string(s) +
                                           ", expected (-1)^sigma = " + std::to_string(expected_sign));
                    }
                }
            }
            // Merged coefficients of S(l) must equal the signed occurrence counts times pi^(2r).
            const PkPoly merged = builder.S_l(l, 2 * r);
            for (const auto& [word, signs] : tally) {
                long net = 0;
                for (int s : signs) net += s;
                if (merged.at(word) != Coefficient::pi_power(2 * r, Rational(net))) {
                    failures.push_back(word.str() + ": merged coefficient " + merged.at(word).str() +
                                       " differs from signed count " + std::to_string(net));
                }
            }
            for (auto& v : even_p_violations(merged, "S(" + std::to_string(l) + ")")) failures.push_back(std::move(v));
            ws.push_back(failures_witness("occurrences in S(" + std::to_string(l) + ") at b-order " +
                                              std::to_string(2 * r),
                                          std::move(failures)));
        }
    }
    Witness info;
    info.label = "occurrences whose sign equals (-1)^(sum of k positions): " + std::to_string(literal_agree) +
                 " of " + std::to_string(total);
    info.expect = Expect::Context;
    ws.push_back(std::move(info));
    return make_report("counting", r_max, std::move(ws));
}

VerifyReport check_coefficient_identities(const CoefficientTable& table, int rmax) {
    std::vector<std::string> sum_rule, forms, gamma;
    for (int r = 0; r <= rmax; ++r) {
        Rational total;
        for (int l = 0; l <= r; ++l) {
            const Rational closed = table.f(l, r);
            total += closed;
            Rational summation;
            for (int n = l; n <= r; ++n) {
                const Rational term = table.e(n) * Rational(binomial(n, l), 1);
                summation += ((n - l) % 2 == 0) ? term : -term;
            }
            if (summation != closed) {
                forms.push_back("f(" + std::to_string(l) + "," + std::to_string(r) + "): summation " + summation.str() +
                                " != closed " + closed.str());
            }
        }
        if (total != Rational(1)) {
            sum_rule.push_back("r=" + std::to_string(r) + ": sum_l f = " + total.str());
        }
        for (int rho = 0; rho <= r; ++rho) {
            Rational lsum;
            for (int l = rho; l <= r; ++l) lsum += table.f(l, r) * Rational(binomial(r + l - rho, l - rho), 1);
            const Rational expected = gamma_ratio_half(r, rho);
            if (lsum != expected) {
                gamma.push_back("(r,rho)=(" + std::to_string(r) + "," + std::to_string(rho) + "): l-sum " + lsum.str() +
                                " != " + expected.str());
            }
        }
    }
    std::vector<Witness> ws;
    ws.push_back(failures_witness("sum_l f_{l,r} = 1 for r <= " + std::to_string(rmax), std::move(sum_rule)));
    ws.push_back(failures_witness("f_{l,r} summation = closed form for l <= r <= " + std::to_string(rmax), std::move(forms)));
    ws.push_back(failures_witness("sum_l f_{l,r} C(r+l-rho, l-rho) = Gamma ratio for rho <= r <= " + std::to_string(rmax),
                                  std::move(gamma)));
    return make_report("coefficients", rmax, std::move(ws));
}

VerifyReport check_replacement_rule(const SeriesBuilder& builder, int order_b) {
    std::vector<Witness> ws;
    ws.push_back(zero_witness(at_order("(p -> k) ktilde^res - ktilde, expanded", order_b),
                              replace_p_by_k(expand_named(builder, SeriesId::KtildeResClosed, order_b)) -
                                  expand_named(builder, SeriesId::Ktilde, order_b)));
    const int r_max = order_b / 2;
    for (int l = 0; l <= r_max; ++l) {
        const int order = 2 * r_max;
        ws.push_back(zero_witness("(p -> k) S(" + std::to_string(l) + ") - sum_alpha (-pi^2)^alpha k(bk)^(2 alpha) [order " +
                                      std::to_string(order) + "]",
                                  replace_p_by_k(builder.S_l(l, order)) - builder.ktilde_direct(order)));
    }
    return make_report("replacement", order_b, std::move(ws));
}

VerifyReport check_high_energy(const SeriesBuilder& builder, int order_pk, int order_b) {
    std::vector<Witness> ws;
    ws.push_back(zero_witness(at_order("(P - P^res) - (ktilde - ktilde^res)/2", order_pk),
                              builder.Phe_from_difference(order_pk) - builder.Phe_closed(order_pk)));
    ws.push_back(zero_witness(at_order("P^he vanishes", 1), builder.Phe_from_difference(1)));
    ws.push_back(zero_witness(at_order("P^he expanded vanishes", 1), expand_named(builder, SeriesId::Phe, 1)));
    Witness second = zero_witness(at_order("P^he is nonzero", 2), builder.Phe_from_difference(2));
    second.expect = Expect::Nonzero;
    ws.push_back(std::move(second));
    ws.push_back(zero_witness(at_order("expanded (P - P^res) - (ktilde - ktilde^res)/2", order_b),
                              expand_core(builder.Phe_from_difference(order_b), order_b) -
                                  expand_core(builder.Phe_closed(order_b), order_b)));
    return make_report("high-energy", order_pk, std::move(ws));
}

VerifyReport check_golden(const SeriesBuilder& builder, const std::vector<GoldenTable>& tables) {
    std::vector<Witness> ws;
    int order = 0;
    for (const auto& table : tables) {
        order = std::max(order, table.order);
        const BPoly computed = expand_named(builder, table.series, table.order);
        const BPoly expected = table.to_poly();
        Witness w = zero_witness(std::string(series_name(table.series)) + " [B-order " + std::to_string(table.order) + "]",
                                 computed - expected);
        for (const auto& [word, c] : std::get<BPoly>(*w.residual).terms()) {
            for (const auto& [e, v] : c.terms()) {
                (void)v;
                w.failures.push_back(word.str() + " pi^" + std::to_string(e) + ": computed " +
                                     computed.at(word).at(e).str() + ", table " + expected.at(word).at(e).str());
            }
        }
        ws.push_back(std::move(w));
    }
    return make_report("golden", order, std::move(ws));
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"coefficients", "relations",   "idempotence", "t-not-idempotent",
                                                "routes",       "res-algebra", "counting",    "replacement",
                                                "high-energy",  "golden"};
    return names;
}

std::vector<VerifyReport> run_suite(const std::string& name, const VerifyOptions& options) {
    if (name == "all") {
        std::vector<VerifyReport> out;
        for (const auto& n : suite_names()) {
            auto r = run_suite(n, options);
            out.insert(out.end(), r.begin(), r.end());
        }
        return out;
    }
    const SeriesBuilder builder{CoefficientTable(options.mutation)};
    std::function<VerifyReport()> run;
    if (name == "coefficients") {
        run = [&] { return check_coefficient_identities(builder.table(), options.coeff_rmax); };
    } else if (name == "relations") {
        run = [&] { return check_defining_relations(builder, options.order_pk); };
    } else if (name == "idempotence") {
        run = [&] { return check_idempotence(builder, options.order_pk); };
    } else if (name == "t-not-idempotent") {
        run = [&] { return check_t_not_idempotent(builder); };
    } else if (name == "routes") {
        run = [&] { return check_route_equivalence(builder, options.order_pk, options.order_b); };
    } else if (name == "res-algebra") {
        run = [&] { return check_res_algebra(builder, options.order_pk); };
    } else if (name == "counting") {
        run = [&] { return check_occurrence_counts(builder, options.counting_r); };
    } else if (name == "replacement") {
        run = [&] { return check_replacement_rule(builder, options.order_b); };
    } else if (name == "high-energy") {
        run = [&] { return check_high_energy(builder, options.order_pk, options.order_b); };
    } else if (name == "golden") {
        run = [&] {
            if (options.golden_path.empty()) {
                throw std::invalid_argument("golden suite needs a golden table path");
            }
            return check_golden(builder, load_golden(options.golden_path, options.golden_order));
        };
    } else {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report = run();
    report.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return {std::move(report)};
}

}  // namespace seacalc
