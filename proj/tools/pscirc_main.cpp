// pscirc: intersection matrices of pseudocircle arrangements.
//
// Exit codes: 0 = predicate true / operation succeeded; 1 = predicate false
// (a machine-parsable `witness:` line is printed); 2 = usage or input error;
// 3 = the two methods of a --both run disagree (an internal-equivalence
// alarm, never expected).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pscirc/analysis.hpp"
#include "pscirc/consistency.hpp"
#include "pscirc/dense.hpp"
#include "pscirc/embedding.hpp"
#include "pscirc/enumerate.hpp"
#include "pscirc/geometry.hpp"
#include "pscirc/io.hpp"

namespace {

constexpr const char* kWitnessGrammar =
    "Witness lines (printed on exit 1, one line, space-separated key=value):\n"
    "  witness: validation row=<label> [entry=<+-k>] message=\"...\"\n"
    "  witness: consistency k=<k> j=<j> i=<i> entry=<+-i> side_row_k=<0|1> "
    "side_row_i=<0|1> triple=<a>,<b>,<c>\n"
    "  witness: genus value=<g>\n"
    "  witness: quad subset=<a>,<b>,<c>,<d>\n"
    "  witness: om reason=<not-antipodal row=<label> | inconsistent | genus value=<g>>\n"
    "  witness: iso reason=canonical-forms-differ\n";

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string join(const std::vector<int>& xs, char sep = ',') {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

pscirc::LabelPermutation parse_perm(const std::string& text) {
    // "1:2,2:3,3:1"
    std::map<int, int> mapping;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw pscirc::DomainError("bad permutation item '" + item + "' (want a:b,c:d,...)");
        mapping[std::stoi(item.substr(0, colon))] = std::stoi(item.substr(colon + 1));
    }
    return pscirc::LabelPermutation(std::move(mapping));
}

enum class Method { direct, quads, both };

struct MethodFlags {
    bool direct = false;
    bool quads = false;
    bool both = false;

    Method resolve() const {
        if (both) return Method::both;
        if (quads) return Method::quads;
        return Method::direct;
    }
};

void add_method_flags(CLI::App* cmd, MethodFlags& flags) {
    auto* d = cmd->add_flag("--direct", flags.direct, "decide by the direct method (default)");
    auto* q = cmd->add_flag("--quads", flags.quads, "decide through 4-subarrangements");
    auto* b = cmd->add_flag("--both", flags.both, "run both methods and compare");
    d->excludes(q);
    d->excludes(b);
    q->excludes(b);
}

int cmd_validate(const std::string& text) {
    pscirc::IntersectionMatrix m;
    try {
        m = pscirc::parse_matrix(text);
    } catch (const pscirc::ValidationError& e) {
        const auto& v = e.violation();
        std::cout << "invalid\n";
        std::cout << "witness: validation row=" << v.row_label;
        if (v.entry) std::cout << " entry=" << v.entry->to_string();
        std::cout << " message=\"" << v.message << "\"\n";
        return 1;
    }
    std::cout << "valid n=" << m.n() << "\n";
    return 0;
}

int cmd_consistency(const pscirc::IntersectionMatrix& m) {
    auto w = pscirc::check_consistency(m);
    if (!w) {
        std::cout << "consistent\n";
        return 0;
    }
    auto triple = pscirc::inconsistent_triple(m);
    std::cout << "inconsistent\n";
    std::cout << "witness: consistency k=" << w->k << " j=" << w->j << " i=" << w->i
              << " entry=" << w->offending_entry.to_string()
              << " side_row_k=" << (w->side_in_row_k ? 1 : 0)
              << " side_row_i=" << (w->side_in_row_i ? 1 : 0) << " triple=" << join(*triple)
              << "\n";
    return 1;
}

int cmd_sphere(const pscirc::IntersectionMatrix& m, Method method) {
    const auto print_quad_witness = [&](const pscirc::SphereViaQuadsResult& r) {
        if (r.witness)
            std::cout << "witness: quad subset=" << join(*r.witness) << "\n";
        else
            std::cout << "witness: genus value=" << pscirc::genus(m) << "\n";
    };
    switch (method) {
        case Method::direct: {
            const int g = pscirc::genus(m);
            std::cout << (g == 0 ? "sphere-embeddable" : "not-sphere-embeddable") << " (direct)\n";
            if (g == 0) return 0;
            std::cout << "witness: genus value=" << g << "\n";
            return 1;
        }
        case Method::quads: {
            auto r = pscirc::is_sphere_embeddable_via_quads(m);
            std::cout << (r.embeddable ? "sphere-embeddable" : "not-sphere-embeddable")
                      << " (quads)\n";
            if (r.embeddable) return 0;
            print_quad_witness(r);
            return 1;
        }
        case Method::both: {
            const bool direct = pscirc::is_sphere_embeddable_direct(m);
            auto r = pscirc::is_sphere_embeddable_via_quads(m);
            std::cout << "direct: " << (direct ? "sphere-embeddable" : "not-sphere-embeddable")
                      << "\n";
            std::cout << "quads: " << (r.embeddable ? "sphere-embeddable" : "not-sphere-embeddable")
                      << "\n";
            if (direct != r.embeddable) {
                std::cout << "agreement: no\n";
                return 3;
            }
            std::cout << "agreement: yes\n";
            if (direct) return 0;
            print_quad_witness(r);
            return 1;
        }
    }
    return 2;
}

int cmd_iso(const pscirc::IntersectionMatrix& a, const pscirc::IntersectionMatrix& b,
            Method method) {
    auto report = [](bool iso) {
        std::cout << (iso ? "isomorphic" : "not-isomorphic") << "\n";
        if (iso) return 0;
        std::cout << "witness: iso reason=canonical-forms-differ\n";
        return 1;
    };
    switch (method) {
        case Method::direct:
            return report(pscirc::are_isomorphic(a, b));
        case Method::quads: {
            auto r = pscirc::iso_via_quads(a, b);
            if (r.advisory)
                std::cout << "# advisory: an input is inconsistent; the 4-subarrangement "
                             "criterion is only guaranteed for strict arrangements\n";
            return report(r.isomorphic);
        }
        case Method::both: {
            const bool direct = pscirc::are_isomorphic(a, b);
            auto r = pscirc::iso_via_quads(a, b);
            std::cout << "direct: " << (direct ? "isomorphic" : "not-isomorphic") << "\n";
            std::cout << "quads: " << (r.isomorphic ? "isomorphic" : "not-isomorphic") << "\n";
            if (direct != r.isomorphic && !r.advisory) {
                std::cout << "agreement: no\n";
                return 3;
            }
            std::cout << "agreement: " << (direct == r.isomorphic ? "yes" : "advisory-only") << "\n";
            return report(direct);
        }
    }
    return 2;
}

int cmd_om(const pscirc::IntersectionMatrix& m) {
    if (pscirc::is_uniform_oriented_matroid(m)) {
        std::cout << "uniform-oriented-matroid\n";
        return 0;
    }
    std::cout << "not-uniform-oriented-matroid\n";
    const auto d = pscirc::dense::from_matrix(m);
    const int bad_row = pscirc::dense::first_non_antipodal_row(d);
    if (bad_row >= 0) {
        std::cout << "witness: om reason=not-antipodal row="
                  << m.labels()[static_cast<std::size_t>(bad_row)] << "\n";
    } else if (pscirc::check_consistency(m)) {
        std::cout << "witness: om reason=inconsistent\n";
    } else {
        std::cout << "witness: om reason=genus value=" << pscirc::genus(m) << "\n";
    }
    return 1;
}

int cmd_enumerate(int n, const std::string& filter_name, bool summary, bool allow_long) {
    const auto filter = pscirc::census_filter_from_string(filter_name);
    pscirc::EnumerateOptions opts;
    opts.allow_long_running = allow_long;
    if (!summary) {
        bool first = true;
        pscirc::enumerate_scan(n, filter, opts, [&](const pscirc::CensusEntry& e) {
            if (!first) std::cout << "\n";
            first = false;
            std::cout << pscirc::census_block(e);
        });
        return 0;
    }
    auto census = pscirc::enumerate_census(n, filter, opts);
    auto orbits = pscirc::count_reorientation_orbits(census);
    auto variants = pscirc::equivalence_variant_counts(census);
    std::vector<std::size_t> orbit_sizes;
    for (const auto& o : orbits) orbit_sizes.push_back(o.size());
    std::sort(orbit_sizes.rbegin(), orbit_sizes.rend());
    std::cout << "{\"n\":" << n << ",\"filter\":\"" << pscirc::to_string(filter)
              << "\",\"classes\":" << census.size() << ",\"variants\":{"
              << "\"relabel_rotation\":" << variants.relabel_rotation
              << ",\"plus_mirror\":" << variants.plus_mirror
              << ",\"plus_reorientation\":" << variants.plus_reorientation
              << ",\"plus_both\":" << variants.plus_both << "},\"reorientation_orbit_sizes\":[";
    for (std::size_t i = 0; i < orbit_sizes.size(); ++i)
        std::cout << (i ? "," : "") << orbit_sizes[i];
    std::cout << "]}\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pscirc: intersection matrices of pseudocircle arrangements"};
    app.require_subcommand(1);
    app.footer(std::string("Inputs are .psm files (or .circ for from-circles); '-' or no "
                           "argument reads standard input.\n\n") +
               kWitnessGrammar);

    std::string file = "-";
    std::string file_b;
    std::string perm_text;
    std::string filter_name = "all";
    std::string export_format;
    int drop_label = 0;
    int reorient_label = 0;
    int census_n = 3;
    bool summary = false;
    bool allow_long = false;
    double eps = 1e-9;
    MethodFlags sphere_flags, iso_flags;

    auto* validate_cmd = app.add_subcommand("validate", "check the Def.-2 row condition");
    validate_cmd->add_option("file", file, "input .psm");

    auto* consistency_cmd = app.add_subcommand("consistency", "decide Def.-3 consistency");
    consistency_cmd->add_option("file", file, "input .psm");

    auto* genus_cmd = app.add_subcommand("genus", "genus of the unique cellular embedding");
    genus_cmd->add_option("file", file, "input .psm");

    auto* faces_cmd = app.add_subcommand("faces", "face walks of the embedding");
    faces_cmd->add_option("file", file, "input .psm");

    auto* sphere_cmd = app.add_subcommand("sphere", "decide sphere-embeddability");
    sphere_cmd->add_option("file", file, "input .psm");
    add_method_flags(sphere_cmd, sphere_flags);

    auto* iso_cmd = app.add_subcommand("iso", "decide combinatorial isomorphism");
    iso_cmd->add_option("file_a", file, "first .psm")->required();
    iso_cmd->add_option("file_b", file_b, "second .psm")->required();
    add_method_flags(iso_cmd, iso_flags);

    auto* classify_cmd = app.add_subcommand("classify3", "type of a consistent 3-matrix");
    classify_cmd->add_option("file", file, "input .psm");

    auto* om_cmd = app.add_subcommand("om", "uniform-oriented-matroid test");
    om_cmd->add_option("file", file, "input .psm");

    auto* sub_cmd = app.add_subcommand("submatrix", "delete one curve");
    sub_cmd->add_option("--drop", drop_label, "label to delete")->required();
    sub_cmd->add_option("file", file, "input .psm");

    auto* reorient_cmd = app.add_subcommand("reorient", "reverse one curve's orientation");
    reorient_cmd->add_option("label", reorient_label, "label to reorient")->required();
    reorient_cmd->add_option("file", file, "input .psm");

    auto* relabel_cmd = app.add_subcommand("relabel", "apply a label permutation");
    relabel_cmd->add_option("perm", perm_text, "permutation as a:b,c:d,...")->required();
    relabel_cmd->add_option("file", file, "input .psm");

    auto* canonical_cmd = app.add_subcommand("canonical", "canonical form");
    canonical_cmd->add_option("file", file, "input .psm");

    auto* enum_cmd = app.add_subcommand("enumerate", "census of all n-matrices");
    enum_cmd->add_option("--n", census_n, "curve count (2..4; 5 with --allow-long)")->required();
    enum_cmd->add_option("--filter", filter_name, "all | consistent | genus0 | om");
    enum_cmd->add_flag("--summary", summary, "print a JSON summary instead of blocks");
    enum_cmd->add_flag("--allow-long", allow_long, "enable the long-running n=5 search");

    auto* circles_cmd = app.add_subcommand("from-circles", "intersection matrix of a .circ file");
    circles_cmd->add_option("file", file, "input .circ");
    circles_cmd->add_option("--eps", eps, "degeneracy tolerance (default 1e-9)");

    auto* export_cmd = app.add_subcommand("export", "embedded-graph export");
    export_cmd->add_option("file", file, "input .psm");
    auto* dot_flag = export_cmd->add_flag("--dot", "DOT output");
    auto* json_flag = export_cmd->add_flag("--json", "JSON output (default)");
    dot_flag->excludes(json_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(read_input(file));

        if (enum_cmd->parsed()) return cmd_enumerate(census_n, filter_name, summary, allow_long);

        if (circles_cmd->parsed()) {
            auto arr = pscirc::parse_circles(read_input(file));
            arr.epsilon = eps;
            std::cout << pscirc::serialize_matrix(pscirc::matrix_from_circles(arr));
            return 0;
        }

        if (iso_cmd->parsed()) {
            auto a = pscirc::parse_matrix(read_input(file));
            auto b = pscirc::parse_matrix(read_input(file_b));
            return cmd_iso(a, b, iso_flags.resolve());
        }

        auto m = pscirc::parse_matrix(read_input(file));

        if (consistency_cmd->parsed()) return cmd_consistency(m);
        if (genus_cmd->parsed()) {
            std::cout << pscirc::genus(m) << "\n";
            return 0;
        }
        if (faces_cmd->parsed()) {
            auto g = pscirc::build_embedded_graph(m);
            auto walks = pscirc::trace_faces(g);
            std::cout << "faces " << walks.size() << "\n";
            for (const auto& w : walks) {
                std::cout << "face:";
                for (const auto& d : w.darts) std::cout << " " << d.to_string();
                std::cout << "\n";
            }
            return 0;
        }
        if (sphere_cmd->parsed()) return cmd_sphere(m, sphere_flags.resolve());
        if (classify_cmd->parsed()) {
            std::cout << pscirc::to_string(pscirc::classify_triple(m)) << "\n";
            return 0;
        }
        if (om_cmd->parsed()) return cmd_om(m);
        if (sub_cmd->parsed()) {
            std::cout << pscirc::serialize_matrix(pscirc::submatrix_delete(m, drop_label));
            return 0;
        }
        if (reorient_cmd->parsed()) {
            std::cout << pscirc::serialize_matrix(pscirc::reorient(m, reorient_label));
            return 0;
        }
        if (relabel_cmd->parsed()) {
            std::cout << pscirc::serialize_matrix(pscirc::relabel(m, parse_perm(perm_text)));
            return 0;
        }
        if (canonical_cmd->parsed()) {
            std::cout << pscirc::canonical_form(m).to_psm();
            return 0;
        }
        if (export_cmd->parsed()) {
            if (dot_flag->count() > 0)
                std::cout << pscirc::export_graph_dot(m);
            else
                std::cout << pscirc::export_graph_json(m);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
