#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "z2r/analysis.hpp"
#include "z2r/codes.hpp"
#include "z2r/constructions.hpp"
#include "z2r/io.hpp"
#include "z2r/search.hpp"

namespace z2r::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    std::size_t limit = kDefaultSpanLimit;
    std::string seed;
    std::vector<std::string> files;

    // construct
    std::string variant;
    std::string x, y, e, a, t = "1";

    // macwilliams
    std::string coeffs;
    std::uint64_t size = 0;

    // search
    int alpha = -1;
    int beta = -1;
    int n = 0;
    bool two_weight = false;
    std::string type_tag;
    std::string separable;
    unsigned threads = 1;
};

struct Io {
    std::istream& in;
    std::ostream& out;
};

std::string slurp(std::istream& s) {
    std::ostringstream buf;
    buf << s.rdbuf();
    return buf.str();
}

std::string read_source(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return slurp(in);
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open " + path);
    return slurp(f);
}

// The i-th input code: the i-th path, else --seed for the first, else stdin.
GenMatrix load(const Options& o, Io& io, std::size_t i = 0) {
    std::string path;
    if (i < o.files.size()) path = o.files[i];
    else if (i == 0 && !o.seed.empty()) path = o.seed;
    else if (i > 0 && o.files.size() < i) throw UsageError("expected " + std::to_string(i + 1) + " code files");
    return parse_code_file(read_source(path, io.in));
}

// Seed of a construction: --seed, else the first path, else stdin.
GenMatrix load_seed(const Options& o, Io& io) {
    if (!o.seed.empty()) return parse_code_file(read_source(o.seed, io.in));
    return load(o, io, 0);
}

// key=value lines; strings unquoted, everything else compact JSON.
void print_flat(std::ostream& out, const Json& j) {
    for (const auto& [k, v] : j.items()) out << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

void print(const Options& o, std::ostream& out, const Json& j) {
    if (o.json) out << j.dump() << '\n';
    else print_flat(out, j);
}

Json enumerator_json(const WeightEnumerator& w) {
    Json j = to_json(w);
    j["polynomial"] = w.to_string();
    return j;
}

void print_enumerator(const Options& o, std::ostream& out, const WeightEnumerator& w) {
    if (o.json) {
        out << enumerator_json(w).dump() << '\n';
        return;
    }
    out << Json(w.coeffs).dump() << '\n' << w.to_string() << '\n';
}

void print_matrix(const Options& o, std::ostream& out, const GenMatrix& g) {
    if (o.json) out << Json{{"alpha", g.alpha()}, {"beta", g.beta()}, {"matrix", to_json(g)}}.dump() << '\n';
    else out << emit_code_file(g);
}

void cmd_std_form(const Options& o, Io& io) {
    const StandardForm sf = standard_form(load(o, io));
    if (o.json) {
        io.out << Json{{"type", sf.type.to_string()},
                       {"perm_x", sf.perm_x},
                       {"perm_y", sf.perm_y},
                       {"matrix", to_json(sf.matrix)}}
                      .dump()
               << '\n';
        return;
    }
    io.out << "type=" << sf.type.to_string() << '\n'
           << "perm_x=" << Json(sf.perm_x).dump() << '\n'
           << "perm_y=" << Json(sf.perm_y).dump() << '\n'
           << emit_code_file(sf.matrix);
}

void cmd_dual(const Options& o, Io& io) { print_matrix(o, io.out, dual(load(o, io))); }

void cmd_span(const Options& o, Io& io) {
    const Code c = span(load(o, io), o.limit);
    GenMatrix words(c.alpha(), c.beta(), c.words());
    if (o.json) {
        io.out << Json{{"alpha", c.alpha()}, {"beta", c.beta()}, {"size", c.size()}, {"words", to_json(words)}}.dump()
               << '\n';
        return;
    }
    io.out << emit_code_file(words);
}

void cmd_wenum(const Options& o, Io& io) { print_enumerator(o, io.out, weight_enumerator(span(load(o, io), o.limit))); }

std::vector<std::uint64_t> parse_coeffs(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::string token;
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',' || c == '[' || c == ']') c = ' ';
    std::istringstream in(cleaned);
    while (in >> token) {
        std::uint64_t v = 0;
        const auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc() || p != token.data() + token.size())
            throw ParseError(1, 1, "invalid coefficient '" + token + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ParseError(1, 1, "no coefficients given");
    return out;
}

void cmd_macwilliams(const Options& o, Io& io) {
    WeightEnumerator w;
    std::uint64_t size = o.size;
    if (!o.coeffs.empty()) {
        auto a = parse_coeffs(o.coeffs);
        const int n = static_cast<int>(a.size()) - 1;
        w = WeightEnumerator(n, std::move(a));
        if (size == 0) size = w.total();
    } else {
        const Code c = span(load(o, io), o.limit);
        w = weight_enumerator(c);
        size = c.size();
    }
    print_enumerator(o, io.out, macwilliams(w, size));
}

void cmd_check(const Options& o, Io& io) {
    const GenMatrix g = load(o, io);
    const Code c = span(g, o.limit);
    const bool sd = is_self_dual(c);
    Json j;
    j["alpha"] = g.alpha();
    j["beta"] = g.beta();
    j["size"] = c.size();
    j["self_orthogonal"] = is_self_orthogonal(c);
    j["self_dual"] = sd;
    j["type"] = c.type().to_string();
    j["selfdual_type"] = sd ? to_string(classify(c)) : "n/a";
    j["separable"] = is_separable(c);
    if (sd) {
        const auto r = separability_report(c);
        j["separability_report"] = r.values();
        j["separability_agree"] = r.all_agree();
    } else {
        j["separability_report"] = nullptr;
        j["separability_agree"] = nullptr;
    }
    const auto b = check_min_param_bounds(c);
    j["bounds"] = b.applicable ? Json{{"min_alpha", b.min_alpha}, {"min_beta", b.min_beta}, {"violations", b.violations}}
                               : Json(nullptr);
    const auto t = two_weight_check(c);
    Json tw;
    tw["preconditions"] = t.precondition_failures;
    tw["two_weight"] = t.two_weight;
    tw["weights"] = t.weights;
    if (t.preconditions_met() && t.two_weight) {
        tw["alpha_is_2beta"] = t.alpha_is_2beta;
        tw["n_divisible_by_4"] = t.n_divisible_by_4;
        tw["distribution"] = t.distribution_ok;
        tw["dichotomy"] = t.dichotomy_ok;
        tw["delta_at_most_1"] = t.delta_at_most_1;
        tw["all_pass"] = t.all_pass();
    }
    j["two_weight"] = tw;
    if (c.size() > 1) j["min_lee_distance"] = min_lee_distance(c);
    else j["min_lee_distance"] = nullptr;
    print(o, io.out, j);
}

void cmd_construct(const Options& o, Io& io) {
    const std::string& v = o.variant;
    if (v == "direct-sum") {
        const GenMatrix g1 = load(o, io, 0);
        const GenMatrix g2 = o.files.size() >= 2 ? load(o, io, 1) : parse_code_file(slurp(io.in));
        print_matrix(o, io.out, direct_sum(g1, g2));
        return;
    }
    if (v == "theta") {
        const Z2Z4Matrix m = to_z2z4(load_seed(o, io), o.limit);
        if (o.json) {
            Json rows = Json::array();
            std::istringstream lines(emit_z2z4_file(m));
            std::string line;
            std::getline(lines, line);
            while (std::getline(lines, line)) rows.push_back(line);
            io.out << Json{{"alpha", m.alpha}, {"beta", m.beta}, {"matrix", rows}}.dump() << '\n';
        } else {
            io.out << emit_z2z4_file(m);
        }
        return;
    }
    if (v == "theta-inv") {
        std::string path = !o.seed.empty() ? o.seed : (o.files.empty() ? "" : o.files[0]);
        print_matrix(o, io.out, from_z2z4(parse_z2z4_file(read_source(path, io.in)), o.limit));
        return;
    }
    BuildUpInput in;
    if (v == "buildup1") in.variant = 1;
    else if (v == "buildup2") in.variant = 2;
    else if (v == "buildup3") in.variant = 3;
    else throw UsageError("unknown construction '" + v + "'");
    in.x = parse_binary(o.x);
    in.y = parse_ring(o.y);
    in.e = parse_binary(o.e);
    in.a = parse_ring(o.a);
    in.t = parse_ring_elem(o.t);
    print_matrix(o, io.out, build_up(load_seed(o, io), in));
}

void print_results(std::ostream& out, const std::vector<SearchResult>& results) {
    for (const auto& r : results) out << emit_json(r) << '\n';
}

void cmd_search(const Options& o, Io& io) {
    SearchSpec spec;
    spec.alpha = o.alpha;
    spec.beta = o.beta;
    spec.two_weight = o.two_weight;
    spec.threads = o.threads;
    if (!o.type_tag.empty()) {
        if (o.type_tag == "Type0") spec.type_tag = SelfDualType::Type0;
        else if (o.type_tag == "TypeI") spec.type_tag = SelfDualType::TypeI;
        else if (o.type_tag == "TypeII") spec.type_tag = SelfDualType::TypeII;
        else throw UsageError("--type must be Type0, TypeI or TypeII");
    }
    if (!o.separable.empty()) {
        if (o.separable == "true") spec.separable = true;
        else if (o.separable == "false") spec.separable = false;
        else throw UsageError("--separable must be true or false");
    }
    print_results(io.out, enumerate_self_dual(spec));
}

void cmd_classify(const Options& o, Io& io) {
    const auto results = classify_two_weight(o.n, o.threads);
    if (o.json) {
        print_results(io.out, results);
        return;
    }
    io.out << "classes=" << results.size() << '\n';
    for (const auto& r : results) io.out << '\n' << emit_code_file(r.matrix);
}

void add_common(CLI::App* sub, Options& o, bool files = true) {
    sub->add_flag("--json", o.json, "Emit JSON");
    sub->add_option("--limit", o.limit, "Maximum number of codewords to enumerate");
    sub->add_option("--seed", o.seed, "Code file used as the (first) input");
    if (files) sub->add_option("files", o.files, "Code files (default: stdin)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Linear codes over Z2^alpha x R^beta, R = Z2 + uZ2", "z2r"};
    app.require_subcommand(1);

    std::function<void(const Options&, Io&)> action;
    auto bind = [&](CLI::App* sub, void (*fn)(const Options&, Io&)) {
        sub->callback([&action, fn] { action = fn; });
    };

    auto* std_form = app.add_subcommand("std-form", "Standard form, type and column permutations");
    add_common(std_form, o);
    bind(std_form, cmd_std_form);

    auto* dual_cmd = app.add_subcommand("dual", "Generator matrix of the dual code");
    add_common(dual_cmd, o);
    bind(dual_cmd, cmd_dual);

    auto* span_cmd = app.add_subcommand("span", "All codewords");
    add_common(span_cmd, o);
    bind(span_cmd, cmd_span);

    auto* wenum = app.add_subcommand("wenum", "Lee weight enumerator");
    add_common(wenum, o);
    bind(wenum, cmd_wenum);

    auto* mw = app.add_subcommand("macwilliams", "MacWilliams transform of an enumerator");
    add_common(mw, o);
    mw->add_option("--coeffs", o.coeffs, "Coefficients A_0..A_n, comma separated");
    mw->add_option("--size", o.size, "Code size (default: coefficient sum)");
    bind(mw, cmd_macwilliams);

    auto* check = app.add_subcommand("check", "Self-duality, type, separability, bounds and two-weight report");
    add_common(check, o);
    bind(check, cmd_check);

    auto* construct = app.add_subcommand("construct", "Direct sum, building-up and theta constructions");
    construct->add_option("variant", o.variant, "direct-sum|buildup1|buildup2|buildup3|theta|theta-inv")
        ->required()
        ->check(CLI::IsMember({"direct-sum", "buildup1", "buildup2", "buildup3", "theta", "theta-inv"}));
    add_common(construct, o);
    construct->add_option("--x", o.x, "Binary vector x");
    construct->add_option("--y", o.y, "Ring vector y");
    construct->add_option("--e", o.e, "Binary vector e");
    construct->add_option("--a", o.a, "Ring vector a over {0,u}");
    construct->add_option("--t", o.t, "Unit t (1 or v)");
    bind(construct, cmd_construct);

    auto* search = app.add_subcommand("search", "All self-dual codes of a shape, up to permutation (JSON lines)");
    add_common(search, o, false);
    search->add_option("--alpha", o.alpha, "Binary length")->required();
    search->add_option("--beta", o.beta, "Ring length")->required();
    search->add_flag("--two-weight", o.two_weight, "Keep only two-weight codes");
    search->add_option("--type", o.type_tag, "Keep only Type0|TypeI|TypeII");
    search->add_option("--separable", o.separable, "Keep only separable (true) or non-separable (false)");
    search->add_option("--threads", o.threads, "Worker threads");
    bind(search, cmd_search);

    auto* classify_cmd = app.add_subcommand("classify-two-weight", "Two-weight self-dual codes of length n");
    add_common(classify_cmd, o, false);
    classify_cmd->add_option("--n", o.n, "Length alpha + 2 beta")->required();
    classify_cmd->add_option("--threads", o.threads, "Worker threads");
    bind(classify_cmd, cmd_classify);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    Io io{in, out};
    try {
        action(o, io);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return kOk;
}

}  // namespace z2r::cli
