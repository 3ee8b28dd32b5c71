#include "mdrg/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mdrg/generators.hpp"
#include "mdrg/io.hpp"
#include "mdrg/ppoly.hpp"
#include "mdrg/scheme.hpp"

namespace mdrg::cli {

namespace {

unsigned threads_from_env()
{
    const char* raw = std::getenv("MDRG_THREADS");
    if (!raw || !*raw)
        return 0;
    try {
        std::size_t used = 0;
        const long v = std::stol(raw, &used);
        if (used != std::string_view(raw).size() || v < 0)
            throw std::invalid_argument("");
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw InputError(std::string("MDRG_THREADS must be a non-negative integer, got '") + raw + "'");
    }
}

void write_json_file(const std::string& path, const Json& doc)
{
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw InputError("cannot write '" + path + "'");
    file << doc.dump(2) << '\n';
}

Labeling resolve_labeling(const std::string& text, const IntersectionTensor& t)
{
    if (text.empty()) {
        try {
            return Labeling::from_tags(t);
        } catch (const std::invalid_argument&) {
            throw InputError("class tags are not multi-indices; pass --labeling (ad1, ad2 or TAG=i,j;...)");
        }
    }
    if (text == "ad1")
        return labeling_ad1();
    if (text == "ad2")
        return labeling_ad2();
    return Labeling::parse(text);
}

std::vector<int> parse_ints(std::string_view text, std::size_t expected, const std::string& what)
{
    std::vector<int> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw InputError(what + ": '" + item + "' is not an integer");
        out.push_back(v);
    }
    if (out.size() != expected)
        throw InputError(what + " expects " + std::to_string(expected) + " integer argument(s)");
    return out;
}

// Shared state of one invocation.
struct Run {
    std::vector<std::string> args;
    unsigned threads = 0;
    Json report;

    void add(const std::string& name, const Certificate& cert) { report["certificates"][name] = cert.to_json(); }

    int exit_code() const
    {
        for (const auto& [name, cert] : report["certificates"].items())
            if (cert["verdict"] != "pass")
                return PropertyFails;
        return Certified;
    }

    // Scheme data for the certification commands. Records the failing
    // certificate and returns nullopt when the input is not a scheme.
    std::optional<IntersectionTensor> load_tensor(const std::string& path, const std::optional<MonomialOrder>& order)
    {
        report["inputs"]["source"] = path;
        auto source = scheme_source_from_json(read_json_file(path));
        if (auto* g = std::get_if<ColoredGraph>(&source)) {
            if (!order)
                throw InputError("a graph source needs --order to define its m-distances");
            order->require_dimension(g->m());
            auto result = mdrg_check(*g, *order, threads);
            add("mdrg", result.certificate);
            if (!result.passed())
                return std::nullopt;
            return std::move(*result.tensor);
        }
        if (auto* s = std::get_if<SchemeClasses>(&source)) {
            const auto axioms = verify_scheme_axioms(*s);
            add("scheme_axioms", axioms);
            if (!axioms.passed())
                return std::nullopt;
            return intersection_tensor(*s);
        }
        return std::get<IntersectionTensor>(std::move(source));
    }
};

Json generate_document(const std::string& spec, const std::string& input, Run& run)
{
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const std::string params = colon == std::string::npos ? std::string{} : spec.substr(colon + 1);
    auto no_params = [&] {
        if (!params.empty())
            throw InputError("generator '" + name + "' takes no parameters");
    };
    if (name == "cycle")
        return graph_to_json(cycle(parse_ints(params, 1, "cycle:n")[0]));
    if (name == "complete")
        return graph_to_json(complete(parse_ints(params, 1, "complete:n")[0]));
    if (name == "hamming") {
        const auto kq = parse_ints(params, 2, "hamming:k,q");
        return graph_to_json(hamming_graph(kq[0], kq[1]));
    }
    if (name == "cell24") {
        no_params();
        return graph_to_json(cell24());
    }
    if (name == "pauli4") {
        no_params();
        return scheme_to_json(pauli_scheme4());
    }
    if (name == "cartesian") {
        std::vector<ColoredGraph> factors;
        std::string path;
        std::istringstream in(params);
        while (std::getline(in, path, ','))
            factors.push_back(graph_from_json(read_json_file(path)));
        if (factors.empty())
            throw InputError("cartesian:file1,file2,... needs at least one graph file");
        return graph_to_json(cartesian_product(factors));
    }
    if (name == "symmetrize") {
        const int k = parse_ints(params, 1, "symmetrize:k")[0];
        if (input.empty())
            throw InputError("symmetrize:k reads its base scheme from --input");
        run.report["inputs"]["input"] = input;
        return scheme_to_json(symmetrize(scheme_from_json(read_json_file(input)), k));
    }
    if (name == "gen24cell") {
        const auto comma = params.find(',');
        if (comma == std::string::npos || params.find(',', comma + 1) != std::string::npos)
            throw InputError("gen24cell:ell,s expects two rationals");
        const auto t = gen24cell(parse_rational(params.substr(0, comma)), parse_rational(params.substr(comma + 1)));
        auto doc = tensor_to_json(t);
        const auto* integral = t.validate().find("integrality");
        doc["formal"] = integral && !integral->passed;
        return doc;
    }
    throw InputError("unknown generator '" + name +
                     "' (expected cycle, complete, hamming, cartesian, cell24, gen24cell, pauli4, symmetrize)");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    const auto started = std::chrono::steady_clock::now();
    bool quiet = false;
    bool timing = false;
    std::ostringstream sink;
    auto diag = [&]() -> std::ostream& { return quiet ? static_cast<std::ostream&>(sink) : err; };

    CLI::App app{"Exact m-distance, association scheme and multivariate P-polynomial certification", "mdrg"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("-q,--quiet", quiet, "Print nothing; report only through the exit code");
    app.add_flag("--timing", timing, "Add wall-clock seconds to the report");

    std::string spec, output, input;
    auto* generate = app.add_subcommand("generate", "Build a graph, scheme or tensor fixture");
    generate->add_option("spec", spec, "cycle:n | complete:n | hamming:k,q | cartesian:f1,f2,... | cell24 | "
                                       "gen24cell:ell,s | pauli4 | symmetrize:k")
        ->required();
    generate->add_option("-o,--output", output, "Write the document here instead of stdout");
    generate->add_option("--input", input, "Base scheme file for symmetrize:k");

    std::string path, order_text, labeling_text, partial_text, polys_path;
    auto* distances = app.add_subcommand("distances", "All-pairs m-distances of a colored graph");
    distances->add_option("graph", path)->required();
    distances->add_option("--order", order_text, "deglex-sum | deglex-y2 | lex | wdeglex:w1,...")->required();
    distances->add_option("-o,--output", output);

    bool properties = false;
    auto* certify_mdrg = app.add_subcommand("certify-mdrg", "Certify m-distance-regularity");
    certify_mdrg->add_option("graph", path)->required();
    certify_mdrg->add_option("--order", order_text)->required();
    certify_mdrg->add_flag("--properties", properties, "Also check the consequences of m-distance-regularity");
    std::string scheme_out;
    certify_mdrg->add_option("--scheme-out", scheme_out, "On a pass, write the m-distance scheme here");

    auto* verify_scheme = app.add_subcommand("verify-scheme", "Check association scheme axioms");
    verify_scheme->add_option("scheme", path)->required();

    bool boundary = false, recurrences = false;
    auto* certify_ppoly_cmd = app.add_subcommand("certify-ppoly", "Certify the multivariate P-polynomial property");
    certify_ppoly_cmd->add_option("source", path, "graph, scheme or tensor file")->required();
    certify_ppoly_cmd->add_option("--order", order_text)->required();
    certify_ppoly_cmd->add_option("--labeling", labeling_text, "ad1 | ad2 | TAG=i,j;... (default: tags)");
    certify_ppoly_cmd->add_option("--partial", partial_text, "ab:alpha,beta | componentwise");
    certify_ppoly_cmd->add_flag("--boundary", boundary, "Check boundary compatibility");
    auto* polys_opt = certify_ppoly_cmd->add_option("--polys", polys_path, "Extract the polynomials (optional output file)")
                          ->expected(0, 1);
    certify_ppoly_cmd->add_flag("--recurrences", recurrences, "Check the recurrences of the extracted polynomials");

    std::string alpha_text, beta_text;
    bool region = false;
    auto* type_ab = app.add_subcommand("type-ab", "Bivariate type-(alpha,beta) certification");
    type_ab->add_option("source", path)->required();
    type_ab->add_option("--labeling", labeling_text);
    type_ab->add_option("--order", order_text, "Needed when the source is a graph");
    auto* alpha_opt = type_ab->add_option("--alpha", alpha_text);
    auto* beta_opt = type_ab->add_option("--beta", beta_text);
    auto* region_opt = type_ab->add_flag("--region", region, "Compute every feasible (alpha,beta)");
    alpha_opt->needs(beta_opt);
    beta_opt->needs(alpha_opt);
    region_opt->excludes(alpha_opt);

    int m = 0;
    auto* discover = app.add_subcommand("discover", "Find labelings induced by generator classes");
    discover->add_option("scheme", path)->required();
    discover->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    discover->add_option("--order", order_text)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Certified;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Certified;
    } catch (const CLI::ParseError& e) {
        diag() << "error: " << e.what() << '\n';
        return InputFailure;
    }
    Run run;
    run.args = args;
    run.report = Json{{"command", args}, {"artifact_version", artifact_version}, {"inputs", Json::object()},
                      {"certificates", Json::object()}};
    auto emit = [&](int code) {
        if (timing)
            run.report["timing"] = Json{
                {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count()}};
        if (!quiet)
            out << run.report.dump(2) << '\n';
        return code;
    };

    try {
        run.threads = threads_from_env();
        std::optional<MonomialOrder> order;
        if (!order_text.empty()) {
            order = MonomialOrder::parse(order_text);
            run.report["inputs"]["order"] = order->to_string();
        }

        if (generate->parsed()) {
            run.report["inputs"]["spec"] = spec;
            const auto doc = generate_document(spec, input, run);
            if (output.empty()) {
                if (!quiet)
                    out << doc.dump(2) << '\n';
            } else {
                write_json_file(output, doc);
                run.report["result"] = Json{{"written", output}, {"kind", doc["kind"]}};
                return emit(Certified);
            }
            return Certified;
        }

        if (distances->parsed()) {
            run.report["inputs"]["graph"] = path;
            const auto g = graph_from_json(read_json_file(path));
            order->require_dimension(g.m());
            const auto table = m_distance_table(g, *order, run.threads);
            const auto doc = distance_table_to_json(table, g.vertex_names());
            if (output.empty()) {
                if (!quiet)
                    out << doc.dump(2) << '\n';
                return Certified;
            }
            write_json_file(output, doc);
            run.report["result"] = Json{{"written", output}, {"D", doc["D"]}, {"size", table.labels().size()}};
            return emit(Certified);
        }

        if (certify_mdrg->parsed()) {
            run.report["inputs"]["graph"] = path;
            const auto g = graph_from_json(read_json_file(path));
            order->require_dimension(g.m());
            const auto result = mdrg_check(g, *order, run.threads);
            run.add("mdrg", result.certificate);
            if (result.table) {
                Json labels = Json::array();
                for (const auto& l : result.table->labels())
                    labels.push_back(l.to_string());
                run.report["result"]["D"] = std::move(labels);
            }
            if (result.passed()) {
                Json valency = Json::object();
                for (std::size_t k = 0; k < result.tensor->size(); ++k)
                    valency[result.tensor->tag(k)] = format_rational(result.tensor->valency(k));
                run.report["result"]["valencies"] = std::move(valency);
                run.report["result"]["tensor"] = tensor_to_json(*result.tensor);
                if (properties)
                    run.add("properties", mdrg_properties(g, result));
                if (!scheme_out.empty()) {
                    write_json_file(scheme_out, scheme_to_json(*result.scheme));
                    run.report["result"]["scheme_written"] = scheme_out;
                }
            }
            return emit(run.exit_code());
        }

        if (verify_scheme->parsed()) {
            run.report["inputs"]["scheme"] = path;
            auto source = scheme_source_from_json(read_json_file(path));
            if (std::holds_alternative<ColoredGraph>(source))
                throw InputError("verify-scheme expects a scheme or tensor file, got a graph");
            if (const auto* s = std::get_if<SchemeClasses>(&source)) {
                const auto axioms = verify_scheme_axioms(*s);
                run.add("scheme_axioms", axioms);
                if (axioms.passed()) {
                    const auto t = intersection_tensor(*s);
                    run.add("tensor", t.validate());
                    run.report["result"]["tensor"] = tensor_to_json(t);
                }
            } else {
                run.add("tensor", std::get<IntersectionTensor>(source).validate());
            }
            return emit(run.exit_code());
        }

        if (certify_ppoly_cmd->parsed()) {
            std::optional<PartialOrder> partial;
            if (!partial_text.empty()) {
                partial = PartialOrder::parse(partial_text);
                run.report["inputs"]["partial"] = partial->to_string();
            }
            const auto t = run.load_tensor(path, order);
            if (!t)
                return emit(run.exit_code());
            const auto labeling = resolve_labeling(labeling_text, *t);
            run.report["inputs"]["labeling"] = labeling.to_json();
            const auto cert = partial ? certify_ppoly_refined(*t, labeling, *order, *partial)
                                      : certify_ppoly(*t, labeling, *order);
            run.add("ppoly", cert);
            const OrderBound bound = partial ? OrderBound(*partial) : OrderBound(*order);
            if (boundary)
                run.add("boundary", boundary_check(*t, labeling, bound));
            const bool want_polys = polys_opt->count() > 0 || recurrences;
            if (want_polys && !cert.passed()) {
                run.report["result"]["polynomials"] = "skipped: the P-polynomial certificate failed";
            } else if (want_polys) {
                const auto extracted = extract_polynomials(*t, labeling, *order, partial);
                run.add("extraction", extracted.certificate);
                Json polys = Json::object();
                for (const auto& [n, v] : extracted.polynomials)
                    polys[n.to_string()] = Json{{"text", v.to_string(*order)}, {"json", v.to_json(n, *order)}};
                run.report["result"]["polynomials"] = polys;
                if (!polys_path.empty())
                    write_json_file(polys_path, polys);
                if (recurrences && extracted.certificate.passed())
                    run.add("recurrences", verify_recurrences(extracted.polynomials, *t, labeling, bound));
            }
            return emit(run.exit_code());
        }

        if (type_ab->parsed()) {
            if (!region && alpha_text.empty())
                throw InputError("type-ab needs either --alpha/--beta or --region");
            const auto t = run.load_tensor(path, order);
            if (!t)
                return emit(run.exit_code());
            const auto labeling = resolve_labeling(labeling_text, *t);
            run.report["inputs"]["labeling"] = labeling.to_json();
            if (region) {
                const auto r = ab_region_for_scheme(*t, labeling);
                run.report["result"]["region"] = r.to_json();
                if (!r.is_empty) {
                    run.report["result"]["alpha"] = r.alpha.to_string();
                    run.report["result"]["beta"] = r.beta.to_string();
                }
                return emit(r.is_empty ? PropertyFails : Certified);
            }
            const AlphaBeta ab(parse_rational(alpha_text), parse_rational(beta_text));
            run.report["inputs"]["partial"] = PartialOrder(ab).to_string();
            run.add("type_ab", certify_type_ab(*t, labeling, ab));
            return emit(run.exit_code());
        }

        if (discover->parsed()) {
            run.report["inputs"]["scheme"] = path;
            run.report["inputs"]["m"] = m;
            const auto s = scheme_from_json(read_json_file(path));
            const auto found = discover_labelings(s, static_cast<std::size_t>(m), *order);
            Json list = Json::array();
            for (const auto& d : found)
                list.push_back(Json{{"generators", d.generators},
                                    {"labeling", d.labeling.to_json()},
                                    {"certificate", d.certificate.to_json()}});
            run.report["result"]["labelings"] = std::move(list);
            return emit(found.empty() ? PropertyFails : Certified);
        }
    } catch (const std::exception& e) {
        diag() << "error: " << e.what() << '\n';
        return InputFailure;
    }
    diag() << "error: no command\n";
    return InputFailure;
}

} // namespace mdrg::cli
