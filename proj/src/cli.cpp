#include "pcvx/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <json.hpp>
#include <ostream>

#include "pcvx/convex_function.hpp"
#include "pcvx/errors.hpp"
#include "pcvx/json_io.hpp"
#include "pcvx/multifunction.hpp"
#include "pcvx/polyhedron.hpp"
#include "pcvx/relint.hpp"
#include "pcvx/suites.hpp"

namespace pcvx {

using nlohmann::json;

namespace {

CoordSet parse_keep(const std::string& text, int dim) {
    CoordSet keep;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string token = text.substr(pos, next - pos);
        try {
            keep.push_back(std::stoi(token));
        } catch (...) {
            throw ParseError("--keep expects a comma-separated index list");
        }
        pos = next + 1;
    }
    if (!valid_coordset(keep, dim)) {
        throw DomainError("--keep indices must be strictly increasing and within the dimension");
    }
    return keep;
}

// Emitted sets get canonical row scaling and ordering so output bytes depend
// only on the inputs.
json emit_hrep(const HRep& p) { return hrep_to_json(canonicalize_rows(p)); }

json emit_multifn(const MultiFn& f) {
    MultiFn g = f;
    g.graph = canonicalize_rows(g.graph);
    return multifn_to_json(g);
}

json emit_pcfunc(const PCFunc& f) {
    PCFunc g = f;
    g.epi = canonicalize_rows(g.epi);
    return pcfunc_to_json(g);
}

json suite_report(const SuiteResult& r) {
    json failures = json::array();
    for (std::size_t k = 0; k < r.failed_indices.size(); ++k) {
        failures.push_back(json{{"instance", r.failed_indices[k]}, {"reason", r.failure_messages[k]}});
    }
    json notes = json::array();
    for (const std::string& n : r.notes) notes.push_back(n);
    return json{{"kind", "check-report"}, {"suite", r.suite},   {"seed", r.seed},
                {"count", r.count},       {"passed", r.passed}, {"failures", failures},
                {"notes", notes},         {"ok", r.ok()}};
}

void enable_fallthrough(CLI::App* app) {
    for (CLI::App* sub : app->get_subcommands({})) {
        sub->fallthrough();
        enable_fallthrough(sub);
    }
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact calculus of polyhedral convex sets, functions, and multifunctions"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

    std::function<json()> action;
    int exit_on_false = 0;

    std::string in_a, in_b, in_point, in_mat, in_keep, in_to;
    std::string suite;
    std::uint64_t seed = 0;
    int count = 0;
    int jobs = 0;

    // --- poly ---------------------------------------------------------------
    CLI::App* poly = app.add_subcommand("poly", "operations on polyhedral convex sets");
    poly->require_subcommand(1);
    {
        CLI::App* c = poly->add_subcommand("convert", "convert between H- and V-representations");
        c->add_option("--in", in_a, "input hrep or vrep document")->required();
        c->add_option("--to", in_to, "target representation")->check(CLI::IsMember({"h", "v"}));
        c->callback([&] {
            action = [&] {
                const Document doc = load_document(in_a);
                if (std::holds_alternative<HRep>(doc)) {
                    const HRep& p = std::get<HRep>(doc);
                    if (in_to == "h") return emit_hrep(p);
                    return vrep_to_json(h_to_v(p));
                }
                if (std::holds_alternative<VRep>(doc)) {
                    const VRep& v = std::get<VRep>(doc);
                    if (in_to == "v") return vrep_to_json(v);
                    return emit_hrep(v_to_h(v));
                }
                throw ParseError("poly convert expects an hrep or vrep document");
            };
        });
    }
    {
        CLI::App* c = poly->add_subcommand("project", "Fourier-Motzkin coordinate projection");
        c->add_option("--in", in_a, "hrep document")->required();
        c->add_option("--keep", in_keep, "comma-separated coordinates to keep")->required();
        c->callback([&] {
            action = [&] {
                const HRep p = load_hrep(in_a);
                return emit_hrep(project(p, parse_keep(in_keep, p.dim)));
            };
        });
    }
    {
        CLI::App* c = poly->add_subcommand("member", "point membership");
        c->add_option("--set", in_a, "hrep document")->required();
        c->add_option("--point", in_point, "point document")->required();
        c->callback([&] {
            action = [&] { return json{{"member", member(load_hrep(in_a), load_point(in_point))}}; };
        });
    }
    {
        CLI::App* c = poly->add_subcommand("empty", "emptiness test");
        c->add_option("--in", in_a, "hrep document")->required();
        c->callback([&] {
            action = [&] { return json{{"empty", is_empty(load_hrep(in_a))}}; };
        });
    }
    {
        CLI::App* c = poly->add_subcommand("relint", "relative interior as a relatively open set");
        c->add_option("--in", in_a, "hrep document")->required();
        c->callback([&] {
            action = [&] { return relopen_to_json(relative_interior(load_hrep(in_a))); };
        });
    }
    {
        CLI::App* c = poly->add_subcommand("ri-member", "relative interior membership");
        c->add_option("--set", in_a, "hrep document")->required();
        c->add_option("--point", in_point, "point document")->required();
        c->callback([&] {
            action = [&] { return json{{"member", ri_member(load_hrep(in_a), load_point(in_point))}}; };
        });
    }
    {
        CLI::App* c = poly->add_subcommand("affhull", "affine hull (equalities only)");
        c->add_option("--in", in_a, "hrep document")->required();
        c->callback([&] {
            action = [&] { return emit_hrep(affine_hull(load_hrep(in_a))); };
        });
    }
    {
        CLI::App* c = poly->add_subcommand("image", "linear image T(P)");
        c->add_option("--mat", in_mat, "matrix document")->required();
        c->add_option("--in", in_a, "hrep document")->required();
        c->callback([&] {
            action = [&] { return emit_hrep(linear_image(load_matrix(in_mat), load_hrep(in_a))); };
        });
    }
    {
        CLI::App* c = poly->add_subcommand("sum-sets", "Minkowski sum");
        c->add_option("--a", in_a, "hrep document")->required();
        c->add_option("--b", in_b, "hrep document")->required();
        c->callback([&] {
            action = [&] { return emit_hrep(minkowski_sum(load_hrep(in_a), load_hrep(in_b))); };
        });
    }

    // --- mfn ----------------------------------------------------------------
    CLI::App* mfn = app.add_subcommand("mfn", "operations on polyhedral convex multifunctions");
    mfn->require_subcommand(1);
    {
        CLI::App* c = mfn->add_subcommand("dom", "domain");
        c->add_option("--in", in_a, "multifn document")->required();
        c->callback([&] {
            action = [&] { return emit_hrep(domain(load_multifn(in_a))); };
        });
    }
    {
        CLI::App* c = mfn->add_subcommand("rge", "range");
        c->add_option("--in", in_a, "multifn document")->required();
        c->callback([&] {
            action = [&] { return emit_hrep(range(load_multifn(in_a))); };
        });
    }
    {
        CLI::App* c = mfn->add_subcommand("inv", "inverse multifunction");
        c->add_option("--in", in_a, "multifn document")->required();
        c->callback([&] {
            action = [&] { return emit_multifn(inverse(load_multifn(in_a))); };
        });
    }
    {
        CLI::App* c = mfn->add_subcommand("value", "value F(x)");
        c->add_option("--in", in_a, "multifn document")->required();
        c->add_option("--point", in_point, "point document")->required();
        c->callback([&] {
            action = [&] { return emit_hrep(value(load_multifn(in_a), load_point(in_point))); };
        });
    }
    {
        CLI::App* c = mfn->add_subcommand("image", "image F(C)");
        c->add_option("--in", in_a, "multifn document")->required();
        c->add_option("--set", in_b, "hrep document")->required();
        c->callback([&] {
            action = [&] { return emit_hrep(image(load_multifn(in_a), load_hrep(in_b))); };
        });
    }
    {
        CLI::App* c = mfn->add_subcommand("preimage", "preimage F^{-1}(D)");
        c->add_option("--in", in_a, "multifn document")->required();
        c->add_option("--set", in_b, "hrep document")->required();
        c->callback([&] {
            action = [&] { return emit_hrep(preimage(load_multifn(in_a), load_hrep(in_b))); };
        });
    }
    {
        CLI::App* c = mfn->add_subcommand("compose", "composition G after F");
        c->add_option("--outer", in_a, "multifn document for G")->required();
        c->add_option("--inner", in_b, "multifn document for F")->required();
        c->callback([&] {
            action = [&] { return emit_multifn(compose(load_multifn(in_a), load_multifn(in_b))); };
        });
    }
    {
        CLI::App* c = mfn->add_subcommand("sum", "pointwise Minkowski sum F1 + F2");
        c->add_option("--a", in_a, "multifn document")->required();
        c->add_option("--b", in_b, "multifn document")->required();
        c->callback([&] {
            action = [&] { return emit_multifn(sum(load_multifn(in_a), load_multifn(in_b))); };
        });
    }

    // --- fn -----------------------------------------------------------------
    CLI::App* fn = app.add_subcommand("fn", "operations on polyhedral convex functions");
    fn->require_subcommand(1);
    {
        CLI::App* c = fn->add_subcommand("eval", "evaluate f(x)");
        c->add_option("--in", in_a, "pcf document")->required();
        c->add_option("--point", in_point, "point document")->required();
        c->callback([&] {
            action = [&] {
                return json{{"value", extreal_to_string(evaluate(load_pcfunc(in_a), load_point(in_point)))}};
            };
        });
    }
    {
        CLI::App* c = fn->add_subcommand("proper", "properness test");
        c->add_option("--in", in_a, "pcf document")->required();
        c->callback([&] {
            action = [&] { return json{{"proper", is_proper(load_pcfunc(in_a))}}; };
        });
    }
    {
        CLI::App* c = fn->add_subcommand("optval", "optimal value function of (phi, F)");
        c->add_option("--phi", in_a, "pcf document")->required();
        c->add_option("--mfn", in_b, "multifn document")->required();
        c->callback([&] {
            action = [&] { return emit_pcfunc(optimal_value_fn(load_pcfunc(in_a), load_multifn(in_b))); };
        });
    }
    {
        CLI::App* c = fn->add_subcommand("argmin", "solution set M(x) of (phi, F)");
        c->add_option("--phi", in_a, "pcf document")->required();
        c->add_option("--mfn", in_b, "multifn document")->required();
        c->add_option("--point", in_point, "point document")->required();
        c->callback([&] {
            action = [&] {
                return emit_hrep(solution_map(load_pcfunc(in_a), load_multifn(in_b), load_point(in_point)));
            };
        });
    }

    // --- check ----------------------------------------------------------------
    CLI::App* check = app.add_subcommand("check", "run a seeded property suite");
    check->add_option("suite", suite, "one of: roundtrip projection compose sum optval relint ri-graph linimg lp")
        ->required();
    check->add_option("--seed", seed, "instance seed (default 0)");
    check->add_option("--count", count, "instance count (default per suite)");
    check->add_option("--jobs", jobs, "worker threads (default all cores)");
    check->callback([&] {
        exit_on_false = 3;
        action = [&] {
            if (!is_suite(suite)) throw ParseError("unknown suite \"" + suite + "\"");
            return suite_report(run_suite(suite, seed, count, jobs));
        };
    });

    enable_fallthrough(&app);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const json result = action();
        if (format == "text") {
            out << render_text(result);
        } else {
            out << result.dump() << "\n";
        }
        if (exit_on_false != 0 && result.contains("ok") && !result.at("ok").get<bool>()) {
            return exit_on_false;
        }
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace pcvx
