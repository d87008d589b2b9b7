#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <hhci/hhci.hpp>

using json = nlohmann::json;
using namespace hhci;

namespace
{

enum Exit { ok = 0, usage = 1, invalid = 2, failed = 3 };

class usage_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string ideal;
    std::string field = "q";
    bool as_json = false;
    std::string out;
};

json mdeg_json(const Multidegree &mu)
{
    json r = json::array();
    for (int v : mu.rdeg.values()) {
        r.push_back(v);
    }
    return {{"hdeg", mu.hdeg}, {"rdeg", r}};
}

std::vector<int> parse_ints(const std::string &text, const std::string &what)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw algebra_error("malformed " + what + " '" + text + "'");
        }
    }
    return out;
}

Multidegree make_mdeg(int n, int hdeg, const std::vector<int> &rdeg)
{
    if (static_cast<int>(rdeg.size()) != n) {
        throw algebra_error("rdeg has " + std::to_string(rdeg.size()) + " entries, expected " + std::to_string(n));
    }
    if (hdeg < 0) {
        throw algebra_error("negative hdeg");
    }
    return {hdeg, ExponentVector::from_span(rdeg)};
}

int single_block(const IdealSpec &spec, const std::string &command)
{
    if (!spec.single_block()) {
        throw algebra_error(command + " supports single-block ideals only (x1*...*xn); run it on each block separately");
    }
    return spec.n_total;
}

json report_json(const Report &r)
{
    json failures = json::array();
    for (const auto &f : r.failures) {
        failures.push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    }
    return {{"suite", r.suite}, {"cases", r.cases}, {"failures", failures}, {"notes", r.notes}, {"seconds", r.seconds}};
}

std::string report_text(const Report &r)
{
    std::ostringstream os;
    os << r.suite << ": " << r.cases << " cases, " << r.failures.size() << " failures, " << r.seconds << " s\n";
    for (std::size_t i = 0; i < r.failures.size() && i < 10; ++i) {
        os << "  FAIL " << r.failures[i].inputs << "\n    lhs: " << r.failures[i].lhs << "\n    rhs: " << r.failures[i].rhs
           << "\n";
    }
    if (r.failures.size() > 10) {
        os << "  ... " << r.failures.size() - 10 << " more\n";
    }
    for (const auto &n : r.notes) {
        os << "  note: " << n << "\n";
    }
    return os.str();
}

// Result of one command: text for humans, JSON payload, exit code.
struct Outcome {
    std::string text;
    json inputs = json::object();
    json result;
    json provenance = json::object();
    int code = ok;
};

Outcome cmd_basis(const Options &o, int hdeg, const std::string &rdeg_text)
{
    const auto spec = parse_ideal(o.ideal);
    const int n = single_block(spec, "basis");
    const auto mu = make_mdeg(n, hdeg, parse_ints(rdeg_text, "rdeg"));
    const auto basis = cohomology_basis(mu);
    Outcome out;
    out.inputs = {{"ideal", o.ideal}, {"multidegree", mdeg_json(mu)}};
    json elems = json::array();
    std::ostringstream os;
    os << "dim " << basis.size() << " at " << mu.to_string() << "\n";
    for (const auto &s : basis) {
        elems.push_back(print_standard(s));
        os << "  " << print_standard(s) << "\n";
    }
    // Cocycles outside the basis and their rewrites.
    json rewrites = json::array();
    for (const auto &s : enumerate_standard(mu)) {
        if (!is_cocycle(s) || std::find(basis.begin(), basis.end(), s) != basis.end()) {
            continue;
        }
        const auto coords = reduce(Cochain(s));
        Cochain rhs(n, mu.hdeg);
        for (const auto &[t, c] : coords.coords) {
            rhs.add(t, c);
        }
        rewrites.push_back({{"element", print_standard(s)}, {"equals", print_element(rhs)}});
        os << "  " << print_standard(s) << " == " << print_element(rhs) << "\n";
    }
    out.result = {{"dimension", basis.size()}, {"basis", elems}, {"rewrites", rewrites}};
    out.provenance = {{"basis", "standard cocycles minus the smallest target of each non-cocycle one degree below"}};
    out.text = os.str();
    return out;
}

Outcome cmd_dim(const Options &o, int hdeg_max, int box, bool all)
{
    const auto spec = parse_ideal(o.ideal);
    const int n = single_block(spec, "dim");
    check_guardrail(n, Box{hdeg_max, box, 0, 0});
    Outcome out;
    out.inputs = {{"ideal", o.ideal}, {"hdeg_max", hdeg_max}, {"rdeg_box", box}};
    json rows = json::array();
    std::ostringstream os;
    const auto mus = multidegree_box(n, hdeg_max, box);
    const auto dims = parallel_map(mus, [&](const Multidegree &mu) { return hilbert_function(n, mu); });
    for (std::size_t i = 0; i < mus.size(); ++i) {
        if (dims[i] == 0 && !all) {
            continue;
        }
        rows.push_back({{"multidegree", mdeg_json(mus[i])}, {"dim", dims[i]}});
        os << mus[i].to_string() << "  " << dims[i] << "\n";
    }
    out.result = {{"entries", rows}, {"omitted_zeros", !all}};
    out.provenance = {{"dim", "cocycles at mu minus non-cocycles at (hdeg - 1, rdeg)"}};
    out.text = os.str();
    return out;
}

Outcome cmd_cup(const Options &o, const Field &field, const std::string &a, const std::string &b, const std::string &via)
{
    const auto spec = parse_ideal(o.ideal);
    const int n = single_block(spec, "cup");
    if (via != "chain" && via != "closed" && via != "both") {
        throw usage_error("--via must be chain, closed or both");
    }
    const auto f = parse_element(a, n, field);
    const auto g = parse_element(b, n, field);
    Outcome out;
    out.inputs = {{"ideal", o.ideal}, {"f", print_element(f)}, {"g", print_element(g)}, {"via", via}};
    std::optional<Cochain> closed, chain;
    if (via != "chain") {
        closed = cup(f, g);
    }
    if (via != "closed") {
        chain = yoneda(f, g);
    }
    const auto &product = closed ? *closed : *chain;
    std::ostringstream os;
    out.result = json::object();
    if (closed) {
        out.result["closed"] = print_element(*closed);
        os << "closed: " << print_element(*closed) << "\n";
    }
    if (chain) {
        out.result["chain"] = print_element(*chain);
        os << "chain:  " << print_element(*chain) << "\n";
    }
    if (closed && chain) {
        const bool agree = *closed == *chain;
        out.result["agree"] = agree;
        os << (agree ? "agreement\n" : "DISAGREEMENT between closed form and g o f~\n");
        if (!agree) {
            out.code = failed;
            if (*chain == closed->scaled(-1)) {
                out.result["chain_is_negated_closed"] = true;
                os << "note:   chain = -closed; yoneda(g, f) = " << print_element(yoneda(g, f)) << "\n";
            }
        }
    }
    const auto degrees = product.multidegrees();
    if (degrees.size() <= 1) {
        const auto cls = reduce(product);
        out.result["class"] = cls.to_string();
        os << "class:  " << cls.to_string() << "\n";
        if (!degrees.empty()) {
            out.result["multidegree"] = mdeg_json(degrees.front());
        }
    }
    out.provenance = {{"closed", "sgn(I,J) (e_{I u J} t^(p+q), x^(alpha+beta))"},
                      {"chain", "Yoneda composition g o f~_j through the explicit chain-map lift"}};
    out.text = os.str();
    return out;
}

Outcome cmd_present(const Options &o)
{
    const auto spec = parse_ideal(o.ideal);
    Outcome out;
    out.inputs = {{"ideal", o.ideal}, {"blocks", spec.blocks}};
    std::ostringstream os;
    json blocks = json::array();
    int offset = 0;
    for (std::size_t b = 0; b < spec.blocks.size(); ++b) {
        const int nb = spec.blocks[b];
        const auto p = presentation(nb);
        const bool multi = spec.blocks.size() > 1;
        // Renames block-local generators into the global numbering.
        auto rename = [&](std::string text) {
            std::string r;
            for (std::size_t i = 0; i < text.size(); ++i) {
                const char c = text[i];
                if ((c == 'X' || c == 'Y') && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
                    std::size_t j = i + 1;
                    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                        ++j;
                    }
                    r += c + std::to_string(std::stoi(text.substr(i + 1, j - i - 1)) + offset);
                    i = j - 1;
                } else if (c == 'Z' && multi) {
                    r += "Z" + std::to_string(b + 1);
                } else {
                    r += c;
                }
            }
            return r;
        };
        json rels = json::array();
        if (multi) {
            os << "block " << b + 1 << " (n=" << nb << ")\n";
        }
        for (const auto &rel : p.relations) {
            const auto text = rename(rel.poly.to_string());
            rels.push_back({{"family", rel.family}, {"relation", text}});
            os << (multi ? "  " : "") << text << "\n";
        }
        blocks.push_back({{"n", nb}, {"relations", rels}});
        offset += nb;
    }
    out.result = {{"blocks", blocks}};
    out.provenance = {{"relations", "a_1...a_n with a_i in {X_i, Y_i}; Y_i^2; "
                                    "X^([n]-I) (sum_j (-1)^(j+1) Y_{I - i_j}) Z for nonempty I"}};
    out.text = os.str();
    return out;
}

std::optional<mpq_class> parse_value(const std::string &text, const std::string &symbol)
{
    if (text == symbol || text == "_") {
        return std::nullopt;
    }
    try {
        mpq_class v(text);
        v.canonicalize();
        return v;
    } catch (const std::exception &) {
        throw algebra_error("malformed specialization value '" + text + "'");
    }
}

Outcome cmd_hilbert(const Options &o, const std::string &coeff, const std::string &spec_text, unsigned seed)
{
    const auto spec = parse_ideal(o.ideal);
    const auto series = spec.single_block() ? closed_series(spec.n_total) : kunneth_series(spec.blocks);
    Outcome out;
    out.inputs = {{"ideal", o.ideal}, {"blocks", spec.blocks}};
    std::ostringstream os;
    out.provenance = {{"series", "((a0+1)^(n+1) a1...an - (a0+a1)...(a0+an)(a0+a1...an)) / "
                                 "((a1...an - a0^2)(1-a1)...(1-an)), multiplied over blocks"},
                      {"expansion", "geometric in a0^2 (a1...an)^-1 and in each a_i"}};
    if (!coeff.empty()) {
        const auto v = parse_ints(coeff, "--coeff");
        if (v.empty()) {
            throw algebra_error("--coeff needs H,r1,...,rn");
        }
        const auto mu = make_mdeg(spec.n_total, v[0], std::vector<int>(v.begin() + 1, v.end()));
        const auto c = coefficient(series, mu);
        const auto direct = spec.single_block() ? hilbert_function(spec.n_total, mu)
                                                : hilbert_function_blocks(spec.blocks, mu);
        out.result = {{"multidegree", mdeg_json(mu)}, {"coefficient", c.get_str()}, {"enumerated", direct}};
        os << "coefficient at " << mu.to_string() << ": " << c.get_str() << " (enumeration: " << direct << ")\n";
        if (c != mpq_class(static_cast<long>(direct))) {
            out.code = failed;
        }
    } else if (!spec_text.empty()) {
        const auto comma = spec_text.find(',');
        if (comma == std::string::npos) {
            throw algebra_error("--specialize needs u,v");
        }
        const auto u = parse_value(spec_text.substr(0, comma), "u");
        const auto v = parse_value(spec_text.substr(comma + 1), "v");
        const auto s = specialize(series, u, v);
        out.result = {{"numerator", s.numerator.to_string(s.names)}, {"denominator", s.factored_denominator()}};
        os << s.numerator.to_string(s.names) << "\n/ " << s.factored_denominator() << "\n";
    } else {
        const auto red = series.reduced();
        out.result = {{"numerator", series.numerator.to_string(series.names)},
                      {"denominator", series.factored_denominator()},
                      {"reduced", {{"numerator", red.numerator.to_string(red.names)},
                                   {"denominator", red.factored_denominator()}}}};
        os << "H = (" << series.numerator.to_string(series.names) << ")\n  / (" << series.factored_denominator()
           << ")\nreduced: (" << red.numerator.to_string(red.names) << ")\n  / (" << red.factored_denominator() << ")\n";
    }
    if (!spec.single_block()) {
        const auto check = kunneth_spot_check(spec.blocks, 20, seed);
        out.result["kunneth_check"] = report_json(check);
        os << report_text(check);
        if (!check.ok()) {
            out.code = failed;
        }
    }
    out.text = os.str();
    return out;
}

Outcome cmd_verify(const Options &o, const Field &field, const std::string &suite, const std::string &box_text)
{
    const auto spec = parse_ideal(o.ideal);
    const int n = single_block(spec, "verify");
    const auto box = parse_box(box_text);
    const auto reports = run_suite(suite, n, box, field);
    Outcome out;
    out.inputs = {{"ideal", o.ideal}, {"suite", suite}, {"box", box_to_string(box)}, {"field", field.name()}};
    json rs = json::array();
    std::ostringstream os;
    std::size_t failures = 0;
    for (const auto &r : reports) {
        rs.push_back(report_json(r));
        os << report_text(r);
        failures += r.failures.size();
    }
    out.result = {{"reports", rs}, {"failures", failures}};
    out.provenance = {{"oracles", "resolution differential, chain-map lift, exact elimination, enumeration"}};
    out.code = failures == 0 ? ok : failed;
    out.text = os.str();
    return out;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Hochschild cohomology of k[x1..xn]/(x1...xn): bases, cup products, presentation, Hilbert series"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--field", o.field, "coefficient field: q or fp:<prime>");
    app.add_flag("--json", o.as_json, "emit JSON");
    app.add_option("--out", o.out, "also write the JSON report to this file");

    auto ideal_opt = [&](CLI::App *sub) { sub->add_option("--ideal", o.ideal, "e.g. \"x1*x2*x3\"")->required(); };

    int hdeg = 0;
    std::string rdeg;
    auto *basis = app.add_subcommand("basis", "cohomology basis at one multidegree");
    ideal_opt(basis);
    basis->add_option("--hdeg", hdeg)->required();
    basis->add_option("--rdeg", rdeg, "r1,...,rn")->required();

    int hdeg_max = 4, rbox = 2;
    bool all = false;
    auto *dim = app.add_subcommand("dim", "table of dimensions");
    ideal_opt(dim);
    dim->add_option("--hdeg-max", hdeg_max);
    dim->add_option("--rdeg-box", rbox, "bound on |rdeg_i|");
    dim->add_flag("--all", all, "include zero entries");

    std::string ea, eb, via = "closed";
    auto *cupc = app.add_subcommand("cup", "product of two cocycles");
    ideal_opt(cupc);
    cupc->add_option("f", ea)->required();
    cupc->add_option("g", eb)->required();
    cupc->add_option("--via", via, "chain, closed or both");

    auto *present = app.add_subcommand("present", "generators and relations");
    ideal_opt(present);

    std::string coeff, spec_text;
    unsigned seed = 0;
    auto *hilb = app.add_subcommand("hilbert", "multigraded Hilbert series");
    ideal_opt(hilb);
    hilb->add_option("--coeff", coeff, "H,r1,...,rn");
    hilb->add_option("--specialize", spec_text, "u,v (a number, or u / v to stay symbolic)");
    hilb->add_option("--seed", seed, "seed for the multi-block spot checks");

    std::string suite = "all", box_text = "hdeg<=4,|rdeg|<=2,alpha<=2,j<=2";
    auto *ver = app.add_subcommand("verify", "run verification suites");
    ideal_opt(ver);
    ver->add_option("--suite", suite, "d2|partial2|squares|cup|presentation|hilbert|all");
    ver->add_option("--box", box_text, "e.g. hdeg<=4,|rdeg|<=2,alpha<=2,j<=2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    std::string command;
    try {
        const auto field = Field::parse(o.field);
        if (*basis) {
            command = "basis";
            out = cmd_basis(o, hdeg, rdeg);
        } else if (*dim) {
            command = "dim";
            out = cmd_dim(o, hdeg_max, rbox, all);
        } else if (*cupc) {
            command = "cup";
            out = cmd_cup(o, field, ea, eb, via);
        } else if (*present) {
            command = "present";
            out = cmd_present(o);
        } else if (*hilb) {
            command = "hilbert";
            if (!coeff.empty() && !spec_text.empty()) {
                throw usage_error("--coeff and --specialize are exclusive");
            }
            out = cmd_hilbert(o, coeff, spec_text, seed);
        } else {
            command = "verify";
            out = cmd_verify(o, field, suite, box_text);
        }
        out.inputs["field"] = field.name();
    } catch (const usage_error &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const algebra_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const json doc = {{"command", command},
                      {"inputs", out.inputs},
                      {"result", out.result},
                      {"provenance", out.provenance},
                      {"timing", {{"seconds", seconds}}}};
    if (o.as_json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << out.text;
    }
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "error: cannot write " << o.out << "\n";
            return invalid;
        }
        f << doc.dump(2) << "\n";
    }
    return out.code;
}
