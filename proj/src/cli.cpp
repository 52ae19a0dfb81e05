#include "affweights/cli.hpp"

#include "affweights/class_congruence.hpp"
#include "affweights/errors.hpp"
#include "affweights/membership.hpp"
#include "affweights/oracle.hpp"
#include "affweights/serialize.hpp"
#include "affweights/weight_graph.hpp"

#include <CLI11.hpp>

#include <functional>
#include <optional>
#include <sstream>

namespace affweights::cli {

namespace {

constexpr const char* kTypeHelp =
    "Affine type as <letter><twist>~<subscript>: A1~l (l>=1), B1~l (l>=3), C1~l (l>=2), "
    "D1~l (l>=4), D2~n (D^(2)_n, n>=3), A2~n (A^(2)_n, n even >=2 or odd >=5), "
    "E1~6, E1~7, E1~8, E2~6, F1~4, G1~2, D3~4";

std::vector<Integer> parse_integers(const std::string& text, const char* what)
{
    std::vector<Integer> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        Integer x;
        if (item.empty() || x.set_str(item, 10) != 0)
            throw InvalidInput(std::string("malformed ") + what + " '" + text + "'");
        out.push_back(x);
    }
    if (out.empty())
        throw InvalidInput(std::string("empty ") + what);
    return out;
}

std::vector<std::size_t> parse_indices(const std::string& text, const char* what)
{
    std::vector<std::size_t> out;
    for (const auto& x : parse_integers(text, what)) {
        if (x < 0 || !x.fits_ulong_p())
            throw InvalidInput(std::string("negative index in ") + what);
        out.push_back(x.get_ui());
    }
    return out;
}

struct WeightOptions {
    std::string type;
    std::string labels;
    bool json = false;

    void attach(CLI::App* sub, bool with_json = true)
    {
        sub->add_option("--type,-t", type, kTypeHelp)->required();
        sub->add_option("--labels,-l", labels, "Highest weight labels <h_i, Lambda>, e.g. 1,2,1")->required();
        if (with_json)
            sub->add_flag("--json", json, "Machine-readable JSON output");
    }

    HighestWeight lambda() const
    {
        return HighestWeight(make_cartan(AffineType::parse(type)), parse_integers(labels, "labels"));
    }
};

void print_header(std::ostream& out, const HighestWeight& lambda)
{
    out << "type " << lambda.data().type.name() << ", Lambda = " << format_hub(lambda.hub())
        << ", level k = " << lambda.level() << "\n";
}

int cmd_maximal(const WeightOptions& opt, std::ostream& out)
{
    const auto lambda = opt.lambda();
    const auto maximal = maximal_dominant_weights(lambda);
    if (opt.json) {
        Json j;
        j["type"] = lambda.data().type.name();
        j["lambda"] = to_json(lambda.labels());
        j["k"] = to_json(lambda.level());
        Json rows = Json::array();
        for (const auto& m : maximal)
            rows.push_back({{"hub", to_json(m.hub)}, {"content", to_json(m.content)}, {"defect", to_json(m.defect)}});
        j["maximal"] = std::move(rows);
        out << j.dump(2) << "\n";
        return kSuccess;
    }
    print_header(out, lambda);
    out << maximal.size() << " positive hubs\n";
    for (const auto& m : maximal)
        out << "  hub " << format_hub(m.hub) << "  content " << format_content(m.content) << "  defect "
            << to_string(m.defect) << "\n";
    return kSuccess;
}

int cmd_nbar(const WeightOptions& opt, std::ostream& out)
{
    const auto table = build_nbar(opt.lambda());
    if (opt.json) {
        out << to_json(table).dump(2) << "\n";
        return kSuccess;
    }
    print_header(out, table.lambda());
    out << table.elements().size() << " weights in " << table.orbit_count() << " finite Weyl orbits, "
        << table.entries().size() << " T-classes (* = representative)\n\n";
    print_nbar_table(out, table);
    return kSuccess;
}

void print_certificate(std::ostream& out, const NbarTable& table, const MembershipCertificate& cert)
{
    const auto& data = table.data();
    RootVector c = RootVector::from(cert.difference);
    out << "eta          = Lambda - sum b_i alpha_i, b = " << format_content(cert.query) << "\n";
    out << "etaTilde     = (" << join(cert.key) << ")\n";
    out << "zeta         = " << format_content(cert.representative) << "  (table representative)\n";
    out << "eta - zeta   = " << format_root(c) << "\n";
    out << "alpha        = " << format_root(cert.alpha) << "\n";
    out << "(zeta|alpha) = " << to_string(cert.zeta_alpha) << "\n";
    out << "(alpha|alpha)= " << to_string(cert.alpha_alpha) << "\n";
    out << "s(eta)       = -c_0/a_0 - ((zeta|alpha) + (alpha|alpha) k/2) = "
        << to_string(make_rational(-cert.difference[0], data.mark(0))) << " - ("
        << to_string(cert.zeta_alpha) << " + " << to_string(cert.alpha_alpha * table.level() / 2)
        << ") = " << cert.shift << "\n";
    out << "defect       = " << to_string(cert.defect) << "\n";
    out << (cert.verdict ? "verdict: weight of L(Lambda) (s >= 0)\n" : "verdict: NOT a weight (s < 0)\n");
}

int cmd_member(const WeightOptions& opt, const std::string& content, std::ostream& out)
{
    const auto table = build_nbar(opt.lambda());
    const Content b(parse_integers(content, "content"));
    const auto cert = delta_shift(table, b);
    if (cert.verdict && !b.nonnegative())
        throw ConsistencyError("positive verdict for a content with a negative entry");
    if (opt.json) {
        out << to_json(cert).dump(2) << "\n";
    } else {
        print_header(out, table.lambda());
        print_certificate(out, table, cert);
    }
    return cert.verdict ? kSuccess : kFalseVerdict;
}

int cmd_shift(const WeightOptions& opt, const std::string& content, std::ostream& out)
{
    const auto table = build_nbar(opt.lambda());
    const auto cert = delta_shift(table, Content(parse_integers(content, "content")));
    if (opt.json)
        out << Json {{"shift", to_json(cert.shift)}}.dump(2) << "\n";
    else
        out << cert.shift << "\n";
    return kSuccess;
}

int cmd_string(const WeightOptions& opt, const std::string& content, std::size_t root, const std::string& word,
    std::ostream& out)
{
    const auto table = build_nbar(opt.lambda());
    const ReflectionWord w = word.empty() ? ReflectionWord {} : parse_indices(word, "word");
    const auto profile = string_profile(table, Content(parse_integers(content, "content")),
        real_root(table.data(), root, w));
    if (opt.json) {
        out << to_json(profile).dump(2) << "\n";
        return kSuccess;
    }
    print_header(out, table.lambda());
    out << "root " << format_root(profile.root) << ", string of length " << profile.weights.size() << "\n";
    for (std::size_t i = 0; i < profile.weights.size(); ++i)
        out << "  " << format_content(profile.weights[i]) << "  s = " << profile.shifts[i] << "\n";
    out << "profile (" << join(profile.shifts) << "): "
        << (is_palindromic(profile.shifts) ? "palindromic" : "NOT palindromic") << ", "
        << (is_unimodal_with_plateau(profile.shifts) ? "unimodal with plateau" : "NOT unimodal") << "\n";
    return kSuccess;
}

int cmd_blocks(int e, const std::string& multicharge, const std::string& content, bool json, std::ostream& out)
{
    std::vector<int> charges;
    for (const auto& x : parse_integers(multicharge, "multicharge")) {
        if (!x.fits_sint_p())
            throw InvalidInput("multicharge entry out of range");
        charges.push_back(static_cast<int>(x.get_si()));
    }
    const bool exists = block_exists(e, charges, Content(parse_integers(content, "content")));
    if (json)
        out << Json {{"e", e}, {"labels", to_json(multicharge_labels(e, charges))}, {"exists", exists}}.dump(2)
            << "\n";
    else
        out << (exists ? "block exists" : "no such block") << " (Lambda = ["
            << join(multicharge_labels(e, charges)) << "] for A1~" << e - 1 << ")\n";
    return exists ? kSuccess : kFalseVerdict;
}

int cmd_diagram(const WeightOptions& opt, long floors, bool dot, std::ostream& out)
{
    if (floors < 0)
        throw InvalidInput("--floors must be non-negative");
    const auto graph = build_weight_graph(build_nbar(opt.lambda()), floors);
    if (opt.json && !dot)
        out << to_json(graph).dump(2) << "\n";
    else
        write_dot(out, graph);
    return kSuccess;
}

// Every content with entries in [0, bound]: criterion against oracle.
int cmd_verify(const WeightOptions& opt, long bound, std::ostream& out, std::ostream& err)
{
    if (bound < 0)
        throw InvalidInput("--bound must be non-negative");
    const auto table = build_nbar(opt.lambda());
    const std::size_t n = table.data().size();
    Content b = Content::zero(n);
    std::size_t checked = 0, weights = 0, disagreements = 0;
    for (;;) {
        const bool criterion = is_weight(table, b);
        const bool oracle = is_weight_oracle(table.lambda(), b);
        ++checked;
        weights += criterion ? 1 : 0;
        if (criterion != oracle) {
            ++disagreements;
            err << "disagreement at " << format_content(b) << ": criterion " << criterion << ", oracle " << oracle
                << "\n";
        }
        std::size_t i = 0;
        while (i < n && b[i] == bound)
            b[i++] = 0;
        if (i == n)
            break;
        b[i] += 1;
    }
    if (opt.json)
        out << Json {{"checked", checked}, {"weights", weights}, {"disagreements", disagreements}}.dump(2) << "\n";
    else
        out << "checked " << checked << " contents with entries in [0," << bound << "]: " << weights
            << " weights, " << disagreements << " disagreements\n";
    return disagreements == 0 ? kSuccess : kConsistency;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app {"Membership of weights in highest-weight modules of affine Lie algebras"};
    app.name("affweights");
    app.require_subcommand(1);
    app.footer(std::string("Exit codes: 0 success/true, 1 false verdict, 2 usage or invalid input, "
                           "3 internal consistency failure.\nWEIGHTS_MAX_ORBIT overrides the orbit size cap.\n")
        + kTypeHelp + "\nNegative entries must be attached with '=', e.g. --content=-1,0,2.");

    WeightOptions opt;
    std::string content, word, multicharge;
    std::size_t root = 0;
    long floors = 3, bound = 6;
    int e = 0;
    bool dot = false;
    std::function<int()> action;

    auto* maximal = app.add_subcommand("maximal", "Positive hubs and maximal dominant weights");
    opt.attach(maximal);
    maximal->callback([&] { action = [&] { return cmd_maximal(opt, out); }; });

    auto* nbar = app.add_subcommand("nbar", "Finite Weyl orbits of the maximal dominant weights and T-classes");
    opt.attach(nbar);
    nbar->callback([&] { action = [&] { return cmd_nbar(opt, out); }; });

    auto* member = app.add_subcommand("member", "Decide membership and print the certificate");
    opt.attach(member);
    member->add_option("--content,-c", content, "Content b of eta = Lambda - sum b_i alpha_i")->required();
    member->callback([&] { action = [&] { return cmd_member(opt, content, out); }; });

    auto* shift = app.add_subcommand("shift", "Print the delta-shift s(eta) only");
    opt.attach(shift);
    shift->add_option("--content,-c", content, "Content b")->required();
    shift->callback([&] { action = [&] { return cmd_shift(opt, content, out); }; });

    auto* string = app.add_subcommand("string", "Delta-shift profile along a root string");
    opt.attach(string);
    string->add_option("--content,-c", content, "Content of a weight on the string")->required();
    string->add_option("--root,-r", root, "Index i of the simple root alpha_i")->required();
    string->add_option("--word,-w", word, "Reflections applied to alpha_i, first to last, e.g. 0,2");
    string->callback([&] { action = [&] { return cmd_string(opt, content, root, word, out); }; });

    auto* blocks = app.add_subcommand("blocks", "Existence of a cyclotomic Hecke algebra block");
    blocks->add_option("--e", e, "e = l + 1 >= 2")->required();
    blocks->add_option("--multicharge,-m", multicharge, "Residues mod e, e.g. 0,1,1,2")->required();
    blocks->add_option("--content,-c", content, "Residue content, e entries")->required();
    blocks->add_flag("--json", opt.json, "Machine-readable JSON output");
    blocks->callback([&] { action = [&] { return cmd_blocks(e, multicharge, content, opt.json, out); }; });

    auto* diagram = app.add_subcommand("diagram", "Weight graph of the first floors (DOT or JSON)");
    opt.attach(diagram, false);
    diagram->add_option("--floors,-f", floors, "Number of floors (weights with b_0 < floors)")->required();
    auto* dot_flag = diagram->add_flag("--dot", dot, "Graphviz output (default)");
    diagram->add_flag("--json", opt.json, "JSON output")->excludes(dot_flag);
    diagram->callback([&] { action = [&] { return cmd_diagram(opt, floors, dot, out); }; });

    auto* verify = app.add_subcommand("verify", "Exhaustive criterion-vs-oracle sweep");
    opt.attach(verify);
    verify->add_option("--bound,-b", bound, "Largest content entry")->required();
    verify->callback([&] { action = [&] { return cmd_verify(opt, bound, out, err); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        return action ? action() : kUsage;
    } catch (const ConsistencyError& ex) {
        err << "internal consistency failure: " << ex.what() << "\n";
        return kConsistency;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        return kUsage;
    }
}

} // namespace affweights::cli
