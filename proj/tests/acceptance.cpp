// Acceptance run: one [PASS]/[FAIL] line per criterion. All comparisons are
// exact (rational or integer equality); there is no floating-point tolerance.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <hhci/hhci.hpp>

using namespace hhci;

namespace
{

int failed_criteria = 0;

struct Criterion {
    Criterion(int i, std::string t) : id(i), title(std::move(t)) {}

    int id;
    std::string title;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::vector<std::string> details;

    void finish(bool pass, std::size_t cases)
    {
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1fs", secs);
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << ". " << title << " (" << cases << " cases, tolerance exact, "
                  << buf << ")\n";
        for (const auto &d : details) {
            std::cout << "       " << d << "\n";
        }
        std::cout.flush();
        failed_criteria += !pass;
    }
};

void absorb(Criterion &c, const Report &r, std::size_t &cases, bool &ok, std::size_t max_lines = 3)
{
    cases += r.cases;
    ok = ok && r.ok();
    for (std::size_t i = 0; i < r.failures.size() && i < max_lines; ++i) {
        const auto &f = r.failures[i];
        c.details.push_back(r.suite + ": " + f.inputs + " | lhs " + f.lhs + " | rhs " + f.rhs);
    }
    if (r.failures.size() > max_lines) {
        c.details.push_back(r.suite + ": ... " + std::to_string(r.failures.size() - max_lines) + " more failures");
    }
}

StandardCochain sc(std::vector<int> set, int q, ExponentVector alpha)
{
    return StandardCochain(IndexSet::from_members(set), q, alpha);
}

void criterion_differentials()
{
    Criterion c{1, "d o d = 0 and partial o partial = 0, n <= 4, hdeg <= 6, alpha <= 4"};
    std::size_t cases = 0;
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
        const Box box{6, 2, 4, 0};
        absorb(c, verify_d2(n, box), cases, ok);
        absorb(c, verify_partial2(n, box), cases, ok);
    }
    c.finish(ok, cases);
}

void criterion_example_pairs()
{
    Criterion c{2, "two-variable subcomplex pairs from the decomposition"};
    std::size_t cases = 0;
    bool ok = true;
    auto expect = [&](const StandardCochain &gamma, std::set<std::pair<StandardCochain, int>> want) {
        ++cases;
        const auto m = subcomplex(gamma);
        const std::set<std::pair<StandardCochain, int>> got(m.targets.begin(), m.targets.end());
        bool pass = got == want;
        for (const auto &[t, sign] : want) {
            const auto pre = image_preimage(t);
            pass = pass && pre && *pre == gamma;
        }
        std::string line = gamma.to_string() + " ->";
        for (const auto &[t, sign] : m.targets) {
            line += " " + std::string(sign > 0 ? "+" : "-") + t.to_string();
        }
        c.details.push_back(line + (pass ? "" : "  (MISMATCH)"));
        ok = ok && pass;
    };
    expect(sc({1}, 0, {0, 3}), {{sc({}, 1, {0, 4}), 1}});
    expect(sc({1}, 1, {0, 1}), {{sc({}, 2, {0, 2}), 1}});
    expect(sc({1, 2}, 0, {0, 0}), {{sc({1}, 1, {1, 0}), -1}, {sc({2}, 1, {0, 1}), 1}});
    // (t, x^5) is an image component by the support criterion.
    expect(sc({2}, 0, {4, 0}), {{sc({}, 1, {5, 0}), 1}});
    c.finish(ok, cases);
}

void criterion_squares()
{
    Criterion c{3, "chain-map squares, n <= 3, hdeg(f) <= 4, alpha <= 2, j <= 2"};
    std::size_t cases = 0;
    bool ok = true;
    for (int n = 1; n <= 3; ++n) {
        absorb(c, verify_squares_suite(n, Box{4, 2, 2, 2}), cases, ok);
    }
    c.finish(ok, cases);
}

void criterion_cup()
{
    Criterion c{4, "closed-form cup == g o f~ termwise, plus commutativity/associativity, same box"};
    std::size_t literal_cases = 0, literal_failures = 0, other_cases = 0;
    Report others;
    others.suite = "cup";
    std::vector<std::string> notes;
    std::string first_literal;
    for (int n = 1; n <= 3; ++n) {
        const auto r = verify_cup(n, Box{4, 2, 2, 2});
        const std::string key = "cup(f,g) vs g o f~";
        for (const auto &f : r.failures) {
            if (f.inputs.find(key) != std::string::npos) {
                ++literal_failures;
                if (first_literal.empty()) {
                    first_literal = f.inputs + " | closed " + f.lhs + " | g o f~ " + f.rhs;
                }
            } else {
                others.failures.push_back(f);
            }
        }
        // Each (f, g) pair runs exactly one literal comparison.
        const auto fs = cocycles_in_box(n, 4, 2).size();
        const auto gs = cocycles_in_box(n, 2, 2).size();
        literal_cases += fs * gs;
        other_cases += r.cases - fs * gs;
        for (const auto &note : r.notes) {
            notes.push_back("n=" + std::to_string(n) + ": " + note);
        }
    }
    c.details.push_back("literal comparison: " + std::to_string(literal_cases - literal_failures) + "/"
                        + std::to_string(literal_cases) + " pairs agree");
    if (!first_literal.empty()) {
        c.details.push_back("first mismatch: " + first_literal);
    }
    c.details.push_back("ring-axiom and factorization checks: " + std::to_string(other_cases - others.failures.size())
                        + "/" + std::to_string(other_cases) + " pass");
    for (const auto &note : notes) {
        c.details.push_back(note);
    }
    std::size_t dummy = 0;
    bool others_ok = true;
    absorb(c, others, dummy, others_ok);
    c.finish(literal_failures == 0 && others_ok, literal_cases + other_cases);
}

void criterion_presentation()
{
    Criterion c{5, "presentation: psi bijection, relations vanish, dims agree, n <= 3, hdeg <= 5, |rdeg| <= 3"};
    std::size_t cases = 0;
    bool ok = true;
    for (int n = 1; n <= 3; ++n) {
        const auto r = verify_presentation_suite(n, Box{5, 3, 2, 2});
        absorb(c, r, cases, ok);
        for (const auto &note : r.notes) {
            c.details.push_back(note);
        }
    }
    // Relation set for two variables, with the third family's sign certified
    // by the coboundary it maps to.
    const auto p = presentation(2);
    std::vector<std::string> got;
    for (const auto &r : p.relations) {
        got.push_back(r.poly.to_string());
    }
    const std::vector<std::string> want{"X1*X2", "X1*Y2", "X2*Y1", "Y1*Y2", "Y1^2", "Y2^2", "X2*Z", "X1*Z", "Y2*Z - Y1*Z"};
    ++cases;
    const bool set_ok = got == want;
    ++cases;
    const bool certified = expand_relation(p.relations.back().poly)
                           == partial(StandardCochain(IndexSet::full(2), 0, ExponentVector(2)));
    c.details.push_back(std::string("n=2 relation set ") + (set_ok ? "matches" : "differs")
                        + "; (Y2 - Y1)Z maps to partial(e12, 1): " + (certified ? "yes" : "no"));
    ok = ok && set_ok && certified;
    c.finish(ok, cases);
}

void criterion_hilbert()
{
    Criterion c{6, "closed Hilbert series coefficients == enumeration, n <= 4, hdeg <= 6, rdeg in [-4,4]"};
    std::size_t cases = 0;
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
        absorb(c, verify_hilbert(n, Box{6, 4, 2, 2}), cases, ok);
    }
    c.finish(ok, cases);
}

void criterion_kunneth()
{
    Criterion c{7, "Kunneth product series for \"x1*x2, x3*x4\" at 50 sampled multidegrees"};
    std::size_t cases = 0;
    bool ok = true;
    const auto spec = parse_ideal("x1*x2, x3*x4");
    absorb(c, kunneth_spot_check(spec.blocks, 50, 20261015), cases, ok);
    c.finish(ok && cases == 50, cases);
}

void criterion_elimination()
{
    Criterion c{8, "cohomology_dim == Gaussian-elimination dim on the criterion-6 box"};
    std::size_t cases = 0;
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
        const DifferentialTable table(n, 7);
        const auto mus = multidegree_box(n, 6, 4);
        const auto parts = parallel_map(mus, [&](const Multidegree &mu) {
            Report r;
            const auto comb = cohomology_dim(mu);
            const auto elim = elimination_dim(table, mu);
            r.check(comb == elim, "n=" + std::to_string(n) + " mu=" + mu.to_string(), std::to_string(comb),
                    std::to_string(elim));
            return r;
        });
        Report all;
        all.suite = "elimination";
        for (const auto &p : parts) {
            all.merge(p);
        }
        absorb(c, all, cases, ok);
    }
    c.finish(ok, cases);
}

} // namespace

int main()
{
    criterion_differentials();
    criterion_example_pairs();
    criterion_squares();
    criterion_cup();
    criterion_presentation();
    criterion_hilbert();
    criterion_kunneth();
    criterion_elimination();
    std::cout << (failed_criteria == 0 ? "ALL CRITERIA PASS" : std::to_string(failed_criteria) + " CRITERIA FAIL") << "\n";
    return failed_criteria == 0 ? 0 : 1;
}
