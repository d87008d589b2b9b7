#ifndef HHCI_VERIFY_HPP
#define HHCI_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <hhci/chain_map.hpp>
#include <hhci/cochain.hpp>
#include <hhci/cohomology_ring.hpp>
#include <hhci/hilbert.hpp>
#include <hhci/parse.hpp>
#include <hhci/report.hpp>

namespace hhci
{

class guardrail_error : public algebra_error
{
public:
    using algebra_error::algebra_error;
};

inline constexpr double max_box_elements = 1e6;

struct Box {
    int hdeg_max = 4;
    int rdeg_abs = 2;
    int alpha_max = 2;
    int j_max = 2;
};

// Parses "hdeg<=4,|rdeg|<=2,alpha<=2,j<=2"; omitted keys keep their defaults.
inline Box parse_box(const std::string &text)
{
    Box box;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find(',', start);
        if (end == std::string::npos) {
            end = text.size();
        }
        const auto item = text.substr(start, end - start);
        const auto le = item.find("<=");
        if (le == std::string::npos) {
            throw algebra_error("box item '" + item + "' lacks '<='");
        }
        const auto key = item.substr(0, le);
        int value = 0;
        try {
            std::size_t used = 0;
            value = std::stoi(item.substr(le + 2), &used);
            if (used != item.size() - le - 2 || value < 0) {
                throw algebra_error("");
            }
        } catch (const std::exception &) {
            throw algebra_error("box item '" + item + "' needs a nonnegative integer bound");
        }
        if (key == "hdeg") {
            box.hdeg_max = value;
        } else if (key == "|rdeg|" || key == "rdeg") {
            box.rdeg_abs = value;
        } else if (key == "alpha") {
            box.alpha_max = value;
        } else if (key == "j") {
            box.j_max = value;
        } else {
            throw algebra_error("unknown box key '" + key + "'");
        }
        start = end + 1;
    }
    return box;
}

inline std::string box_to_string(const Box &b)
{
    return "hdeg<=" + std::to_string(b.hdeg_max) + ",|rdeg|<=" + std::to_string(b.rdeg_abs)
           + ",alpha<=" + std::to_string(b.alpha_max) + ",j<=" + std::to_string(b.j_max);
}

// Rough count of standard elements a suite touches; used by the guardrail.
inline double box_size(int n, const Box &b)
{
    const double subsets = std::pow(2.0, n);
    const double by_alpha = subsets * (b.hdeg_max / 2 + 1) * std::pow(b.alpha_max + 1.0, n);
    const double by_mdeg = (b.hdeg_max + 2) * std::pow(2.0 * b.rdeg_abs + 1, n) * subsets * (b.hdeg_max / 2 + 2);
    return std::max(by_alpha, by_mdeg);
}

inline void check_guardrail(int n, const Box &b)
{
    const double size = box_size(n, b);
    if (size > max_box_elements) {
        throw guardrail_error("box " + box_to_string(b) + " touches about " + std::to_string(static_cast<long>(size))
                              + " standard elements, above the limit of 1000000");
    }
}

inline unsigned worker_count()
{
    if (const char *env = std::getenv("HHCI_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) {
            return static_cast<unsigned>(v);
        }
    }
    return 1;
}

// Applies fn to every item on up to worker_count() threads; results keep the
// order of items.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T> &items, Fn fn) -> std::vector<decltype(fn(items.front()))>
{
    using R = decltype(fn(items.front()));
    std::vector<R> out(items.size());
    const unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(items.size(), 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) {
            out[i] = fn(items[i]);
        }
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < items.size(); i += workers) {
                    out[i] = fn(items[i]);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

// Every standard element with hdeg <= hdeg_max and alpha entries <= alpha_max.
inline std::vector<StandardCochain> standard_in_box(int n, int hdeg_max, int alpha_max)
{
    std::vector<StandardCochain> out;
    long count = 1;
    for (int i = 0; i < n; ++i) {
        count *= alpha_max + 1;
    }
    for_each_subset(IndexSet::full(n), [&](IndexSet set) {
        for (int q = 0; set.size() + 2 * q <= hdeg_max; ++q) {
            for (long code = 0; code < count; ++code) {
                ExponentVector a(n);
                long c = code;
                for (int i = 0; i < n; ++i) {
                    a[i] = static_cast<int>(c % (alpha_max + 1));
                    c /= alpha_max + 1;
                }
                if (!AMonomial(a).is_zero()) {
                    out.emplace_back(set, q, a);
                }
            }
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<StandardCochain> cocycles_in_box(int n, int hdeg_max, int alpha_max)
{
    auto all = standard_in_box(n, hdeg_max, alpha_max);
    std::erase_if(all, [](const StandardCochain &s) { return !is_cocycle(s); });
    return all;
}

namespace detail
{

template <typename Body>
Report timed(const std::string &suite, Body body)
{
    const auto start = std::chrono::steady_clock::now();
    Report rep;
    rep.suite = suite;
    body(rep);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}


} // namespace detail

// d o d = 0 on every basis symbol of degree <= hdeg_max; eps o d_1 = 0; d(U_z).
inline Report verify_d2(int n, const Box &box)
{
    return detail::timed("d2", [&](Report &rep) {
        for (int m = 2; m <= box.hdeg_max; ++m) {
            for_each_basis_symbol(n, m, [&](const BasisSymbol &sym) {
                const auto dd = d(d(ResolutionElement::basis(n, sym)));
                rep.check(dd.is_zero(), "n=" + std::to_string(n) + " d(d(" + sym.to_string() + "))", dd.to_string(), "0");
            });
        }
        for_each_basis_symbol(n, 1, [&](const BasisSymbol &sym) {
            const auto e = augmentation(d(ResolutionElement::basis(n, sym)));
            rep.check(e.is_zero(), "n=" + std::to_string(n) + " eps(d(" + sym.to_string() + "))", e.to_string(), "0");
        });
        for (int z = 1; z <= n; ++z) {
            const auto lhs = d(u_element(n, z));
            ExponentVector left(n), right(n);
            for (int i = 0; i < n; ++i) {
                (i < z ? left : right)[i] = 1;
            }
            const auto rhs = z == n ? ResolutionElement(n)
                                    : ResolutionElement::basis(n, BasisSymbol{},
                                                               TensorCoefficient::pure(AMonomial(left), AMonomial(right)));
            rep.check(lhs == rhs, "n=" + std::to_string(n) + " d(U_" + std::to_string(z) + ")", lhs.to_string(),
                      rhs.to_string());
        }
    });
}

// The coboundary: closed formula, resolution route, gradings, the Gamma
// decomposition and the elimination oracle.
inline Report verify_partial2(int n, const Box &box, const Field &field = {})
{
    return detail::timed("partial2", [&](Report &rep) {
        const auto tag = "n=" + std::to_string(n) + " ";
        for (const auto &s : standard_in_box(n, box.hdeg_max, box.alpha_max)) {
            const auto p = partial(s);
            const auto pp = partial(p);
            rep.check(pp.is_zero(), tag + "partial(partial(" + s.to_string() + "))", pp.to_string(), "0");
            const auto via = partial_via_resolution(Cochain(s));
            rep.check(via == p, tag + "partial(" + s.to_string() + ") vs f o d", p.to_string(), via.to_string());
            bool graded = p.hdeg() == s.hdeg() + 1;
            for (const auto &[t, c] : p.terms()) {
                graded = graded && t.multidegree().rdeg == s.multidegree().rdeg && t.hdeg() == s.hdeg() + 1;
            }
            rep.check(graded, tag + "grading of partial(" + s.to_string() + ")", p.to_string(),
                      "hdeg + 1, same rdeg");
            rep.check(is_cocycle(s) == p.is_zero(), tag + "cocycle test " + s.to_string(),
                      is_cocycle(s) ? "cocycle" : "not a cocycle", p.is_zero() ? "partial = 0" : "partial != 0");
        }
        const auto mus = multidegree_box(n, box.hdeg_max, box.rdeg_abs);
        const DifferentialTable table(n, box.hdeg_max + 1);
        const auto parts = parallel_map(mus, [&](const Multidegree &mu) {
            Report r;
            const auto label = tag + "mu=" + mu.to_string();
            const auto elems = enumerate_standard(mu);
            // Disjoint images and the decomposition into M_gamma.
            std::map<StandardCochain, StandardCochain> owner;
            bool disjoint = true;
            for (const auto &s : elems) {
                owner.emplace(s, s);
            }
            for (const auto &s : enumerate_standard(Multidegree{mu.hdeg - 1, mu.rdeg})) {
                const auto image = partial(s);
                for (const auto &[t, c] : image.terms()) {
                    auto it = owner.find(t);
                    if (it == owner.end() || !(it->second == t)) {
                        disjoint = false;
                    } else {
                        it->second = s;
                    }
                }
            }
            r.check(disjoint, label + " disjoint images", disjoint ? "disjoint" : "shared component", "disjoint");
            for (const auto &s : elems) {
                const bool hit = !(owner.at(s) == s);
                r.check(hit == is_image_component(s), label + " decomposition " + s.to_string(),
                        hit ? "image component" : "in Gamma", is_image_component(s) ? "image component" : "in Gamma");
            }
            const auto comb = cohomology_dim(mu);
            const auto elim = elimination_dim(table, mu, field);
            r.check(comb == elim, label + " dim", std::to_string(comb), std::to_string(elim) + " (elimination)");
            r.check(kernel_is_standard_cocycles(table, mu, field), label + " kernel basis", "elimination kernel",
                    "standard cocycles");
            return r;
        });
        for (const auto &p : parts) {
            rep.merge(p);
        }
    });
}

// Commuting squares with both lift formulas cross-checked.
inline Report verify_squares_suite(int n, const Box &box)
{
    return detail::timed("squares", [&](Report &rep) {
        const auto fs = cocycles_in_box(n, box.hdeg_max, box.alpha_max);
        const auto parts = parallel_map(fs, [&](const StandardCochain &f) {
            Report r;
            const auto label = "n=" + std::to_string(n) + " f=" + f.to_string();
            try {
                const auto sq = verify_squares(Cochain(f), box.j_max, LiftCheck::cross_check);
                r.cases += sq.checked - sq.failures.size();
                for (const auto &fail : sq.failures) {
                    r.check(false, label + " stage " + std::to_string(fail.stage) + " on " + fail.symbol.to_string(),
                            fail.lhs, fail.rhs);
                }
            } catch (const algebra_error &e) {
                r.check(false, label, e.what(), "no error");
            }
            return r;
        });
        for (const auto &p : parts) {
            rep.merge(p);
        }
    });
}

// cup vs Yoneda composition, plus ring axioms of the closed form.
inline Report verify_cup(int n, const Box &box)
{
    return detail::timed("cup", [&](Report &rep) {
        const auto tag = "n=" + std::to_string(n) + " ";
        const auto fs = cocycles_in_box(n, box.hdeg_max, box.alpha_max);
        const auto gs = cocycles_in_box(n, box.j_max, box.alpha_max);
        struct Tally {
            Report r;
            std::size_t opposite_ok = 0, signed_ok = 0, pairs = 0;
        };
        const auto parts = parallel_map(fs, [&](const StandardCochain &f) {
            Tally t;
            for (const auto &g : gs) {
                const Cochain cf(f), cg(g);
                const auto closed = cup(cf, cg);
                const auto chain = yoneda(cf, cg);
                const auto label = tag + "f=" + f.to_string() + " g=" + g.to_string();
                ++t.pairs;
                t.r.check(closed == chain, label + " cup(f,g) vs g o f~", closed.to_string(), chain.to_string());
                const int sign = (f.set().size() * g.set().size()) % 2 == 0 ? 1 : -1;
                if (chain == closed.scaled(sign)) {
                    ++t.signed_ok;
                }
                if (g.hdeg() <= box.hdeg_max && f.hdeg() <= box.j_max && closed == yoneda(cg, cf)) {
                    ++t.opposite_ok;
                }
                t.r.check(partial(chain).is_zero(), label + " yoneda is a cocycle", partial(chain).to_string(), "0");
                const auto swapped = cup(cg, cf);
                t.r.check(closed == swapped.scaled(sign), label + " graded commutativity", closed.to_string(),
                          swapped.scaled(sign).to_string());
                if (!closed.is_zero()) {
                    const auto m = closed.multidegrees().front();
                    t.r.check(m == f.multidegree() + g.multidegree(), label + " mdeg additivity", m.to_string(),
                              (f.multidegree() + g.multidegree()).to_string());
                }
            }
            return t;
        });
        std::size_t pairs = 0, signed_ok = 0, opposite_ok = 0, opposite_pairs = 0;
        for (const auto &t : parts) {
            rep.merge(t.r);
            pairs += t.pairs;
            signed_ok += t.signed_ok;
            opposite_ok += t.opposite_ok;
        }
        for (const auto &f : fs) {
            for (const auto &g : gs) {
                opposite_pairs += g.hdeg() <= box.hdeg_max && f.hdeg() <= box.j_max;
            }
        }
        rep.notes.push_back("g o f~ = (-1)^(|I||J|) cup(f,g) on " + std::to_string(signed_ok) + "/" + std::to_string(pairs)
                            + " pairs");
        rep.notes.push_back("cup(f,g) = f o g~ (opposite composition) on " + std::to_string(opposite_ok) + "/"
                            + std::to_string(opposite_pairs) + " pairs");
        // Associativity and unit on small exponents.
        const auto small = cocycles_in_box(n, box.hdeg_max, std::min(box.alpha_max, 1));
        const Cochain unit(unit_cochain(n));
        for (const auto &a : small) {
            const Cochain ca(a);
            rep.check(cup(unit, ca) == ca && cup(ca, unit) == ca, tag + "unit with " + a.to_string(),
                      cup(unit, ca).to_string(), ca.to_string());
            for (const auto &b : small) {
                const auto ab = cup(ca, Cochain(b));
                for (const auto &c : small) {
                    const auto lhs = cup(ab, Cochain(c));
                    const auto rhs = cup(ca, cup(Cochain(b), Cochain(c)));
                    rep.check(lhs == rhs, tag + "associativity " + a.to_string() + " " + b.to_string() + " " + c.to_string(),
                              lhs.to_string(), rhs.to_string());
                }
            }
        }
        for (const auto &s : cocycles_in_box(n, box.hdeg_max, box.alpha_max)) {
            const auto w = factorize(s);
            const auto e = expand_word(w);
            rep.check(e == Cochain(s) && psi(w) == s && psi_inverse(psi(w)) == w, tag + "factorize " + s.to_string(),
                      e.to_string(), s.to_string());
        }
    });
}

inline Report verify_presentation_suite(int n, const Box &box, const Field &field = {})
{
    return detail::timed("presentation", [&](Report &rep) {
        const auto p = presentation(n);
        const std::size_t expected = (std::size_t{1} << n) + n + (std::size_t{1} << n) - 1;
        rep.check(p.relations.size() == expected, "n=" + std::to_string(n) + " relation count",
                  std::to_string(p.relations.size()), std::to_string(expected));
        for (const auto &rel : p.relations) {
            if (rel.family == 3) {
                const auto lhs = expand_relation(rel.poly);
                const auto rhs = boundary_generator(n, *rel.set);
                rep.check(lhs == rhs && rhs == partial(StandardCochain(*rel.set, 0, ExponentVector(n))),
                          "n=" + std::to_string(n) + " psi(" + rel.poly.to_string() + ") = partial(e_I, 1)",
                          lhs.to_string(), rhs.to_string());
            }
        }
        const auto mus = multidegree_box(n, box.hdeg_max, box.rdeg_abs);
        const auto parts = parallel_map(mus, [&](const Multidegree &mu) { return verify_presentation_at(p, mu, field); });
        for (const auto &r : parts) {
            rep.merge(r);
        }
        if (n == 2) {
            const auto yz = [](int i) { return GCPolynomial(GCMonomial::y(2, i)) * GCPolynomial(GCMonomial::z(2)); };
            const auto alternative = yz(1) + yz(2);
            const auto nf = gc_normalize(alternative);
            rep.notes.push_back("alternative relation (Y1+Y2)Z normalizes to " + nf.to_string()
                                + "; the emitted relation is " + p.relations.back().poly.to_string());
        }
    });
}

inline Report verify_hilbert(int n, const Box &box)
{
    return detail::timed("hilbert", [&](Report &rep) {
        const auto tag = "n=" + std::to_string(n) + " ";
        const auto closed = closed_series(n);
        const auto reduced = closed.reduced();
        const auto a = h1(n);
        const auto b = h2(n);
        rep.check(same_rational_function(subtract(a, b), closed), tag + "h1 - h2 = closed form", "h1 - h2",
                  closed.to_string());
        if (n == 1) {
            const auto one = LaurentPoly::constant(2, 1);
            rep.check(reduced.numerator == one && reduced.factors.empty(), "n=1 closed form reduces to 1",
                      reduced.to_string(), "1");
        }
        const auto mus = multidegree_box(n, box.hdeg_max, box.rdeg_abs);
        const auto parts = parallel_map(mus, [&](const Multidegree &mu) {
            Report r;
            const auto label = tag + "mu=" + mu.to_string();
            const auto c = coefficient(closed, mu);
            const auto dim = hilbert_function(n, mu);
            r.check(c == mpq_class(static_cast<long>(dim)), label + " coefficient", c.get_str(), std::to_string(dim));
            r.check(coefficient(reduced, mu) == c, label + " reduced coefficient", coefficient(reduced, mu).get_str(),
                    c.get_str());
            const auto here = enumerate_standard(mu);
            const auto below = enumerate_standard(Multidegree{mu.hdeg - 1, mu.rdeg});
            const long cocycles = std::count_if(here.begin(), here.end(), is_cocycle);
            const long killers = std::count_if(below.begin(), below.end(), [](const auto &s) { return !is_cocycle(s); });
            r.check(coefficient(a, mu) == cocycles, label + " h1 coefficient", coefficient(a, mu).get_str(),
                    std::to_string(cocycles) + " cocycles");
            r.check(coefficient(b, mu) == killers, label + " h2 coefficient", coefficient(b, mu).get_str(),
                    std::to_string(killers) + " non-cocycles one degree below");
            return r;
        });
        for (const auto &r : parts) {
            rep.merge(r);
        }
    });
}

// Series coefficients of a multi-block ideal vs products of per-block dimensions.
inline Report kunneth_spot_check(const std::vector<int> &blocks, int samples, unsigned seed, int hdeg_max = 6,
                                 int rdeg_abs = 3)
{
    return detail::timed("kunneth", [&](Report &rep) {
        const auto series = kunneth_series(blocks);
        int total = 0;
        for (int b : blocks) {
            total += b;
        }
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> hd(0, hdeg_max), rd(-rdeg_abs, rdeg_abs);
        for (int s = 0; s < samples; ++s) {
            Multidegree mu{hd(rng), ExponentVector(total)};
            for (int i = 0; i < total; ++i) {
                mu.rdeg[i] = rd(rng);
            }
            const auto c = coefficient(series, mu);
            const auto direct = hilbert_function_blocks(blocks, mu);
            rep.check(c == mpq_class(static_cast<long>(direct)), "mu=" + mu.to_string(), c.get_str(),
                      std::to_string(direct));
        }
    });
}

inline const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{"d2", "partial2", "squares", "cup", "presentation", "hilbert"};
    return names;
}

inline std::vector<Report> run_suite(const std::string &suite, int n, const Box &box, const Field &field = {})
{
    check_nvars(n);
    check_guardrail(n, box);
    if (suite == "all") {
        std::vector<Report> out;
        for (const auto &s : suite_names()) {
            out.push_back(run_suite(s, n, box, field).front());
        }
        return out;
    }
    if (suite == "d2") {
        return {verify_d2(n, box)};
    }
    if (suite == "partial2") {
        return {verify_partial2(n, box, field)};
    }
    if (suite == "squares") {
        return {verify_squares_suite(n, box)};
    }
    if (suite == "cup") {
        return {verify_cup(n, box)};
    }
    if (suite == "presentation") {
        return {verify_presentation_suite(n, box, field)};
    }
    if (suite == "hilbert") {
        return {verify_hilbert(n, box)};
    }
    throw algebra_error("unknown suite '" + suite + "'");
}

} // namespace hhci

#endif
