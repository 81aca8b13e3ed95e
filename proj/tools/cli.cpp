#include "cli.hpp"

#include "latres/constructions.hpp"
#include "latres/core.hpp"
#include "latres/embedding.hpp"
#include "latres/error.hpp"
#include "latres/geometry.hpp"
#include "latres/io.hpp"
#include "latres/oracle.hpp"
#include "latres/pipeline.hpp"
#include "latres/render.hpp"
#include "latres/schemes.hpp"
#include "latres/surgery.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>

namespace latres::cli
{

namespace
{

struct Context
{
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

Diagram load(Context& c, const std::string& file)
{
    return file == "-" ? parse_diagram(c.in) : read_diagram(file);
}

// Commands that need a valid diagram report structural problems as
// precondition errors (exit 2); `validate` and `decide` handle them as verdicts.
Embedding embed(const Diagram& d)
{
    const auto report = validate_well_formed(d);
    if (!report.ok())
        throw PreconditionError("diagram is not well formed:\n" + report.summary());
    return Embedding(d);
}

TrajectoryKind kind_of(int k)
{
    if (k == 2)
        return TrajectoryKind::C2;
    if (k == 3)
        return TrajectoryKind::C3;
    throw PreconditionError("--kind must be 2 or 3");
}

void print_ids(std::ostream& os, const std::vector<ElementId>& ids)
{
    for (std::size_t i = 0; i < ids.size(); ++i)
        os << (i ? " " : "") << ids[i];
    os << "\n";
}

template <typename T>
void print_links(std::ostream& os, const char* name, const std::vector<T>& links)
{
    os << name;
    for (const T& l : links)
        os << " " << to_string(l);
    os << "\n";
}

void print_witness(std::ostream& os, const NondiminishingWitness& w)
{
    os << "start " << w.start_hash << " (" << w.start.size() << " elements)\n";
    os << "n7-counts";
    for (std::size_t c : w.n7_counts)
        os << " " << c;
    os << "\n";
    for (std::size_t i = 0; i < w.anchors.size(); ++i)
        os << "insert " << w.anchors[i] << " rank=" << w.ranks[i].value << "\n";
    write_diagram(os, w.start);
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Context c{in, out, err};
    CLI::App app{"Planar slim semimodular lattice diagrams: validation, schemes, surgery, "
                 "normalization and census",
                 "latres"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string file = "-";
    int kind = 3, element = -1, anchor = -1, m = 0, n = 0, max_size = 0, steps = 0;
    int oracle_max = 8;
    std::string trace_out, out_path, out_dir, format;
    std::vector<std::string> overlays;
    std::function<int()> action;

    auto with_file = [&](CLI::App* sub) {
        sub->add_option("file", file, "latdiag file, '-' for standard input");
        return sub;
    };

    auto* validate = with_file(app.add_subcommand("validate", "check well-formedness"));
    validate->callback([&] {
        action = [&] {
            const auto report = validate_well_formed(load(c, file));
            if (report.ok())
            {
                c.out << "well formed\n";
                return kOk;
            }
            c.out << report.summary();
            return kNegative;
        };
    });

    auto* oracle_check =
        with_file(app.add_subcommand("oracle-check", "brute-force order properties"));
    oracle_check->callback([&] {
        action = [&] {
            const Diagram d = load(c, file);
            const auto p = oracle::poset_of(d);
            const bool lattice = oracle::is_lattice(p);
            const bool semimodular = oracle::is_semimodular(p);
            const bool slim = oracle::is_slim(p);
            c.out << "lattice " << lattice << "\nsemimodular " << semimodular << "\nslim " << slim
                  << "\ndistributive " << oracle::is_distributive(p) << "\n";
            return lattice && semimodular && slim ? kOk : kNegative;
        };
    });

    auto* grid_cmd = app.add_subcommand("grid", "print the grid C_m x C_n");
    grid_cmd->add_option("m", m)->required();
    grid_cmd->add_option("n", n)->required();
    grid_cmd->callback([&] {
        action = [&] {
            write_diagram(c.out, canonical_form(grid(m, n)));
            return kOk;
        };
    });

    auto* anchors_cmd = with_file(app.add_subcommand("anchors", "list C2- or C3-anchors"));
    anchors_cmd->add_option("--kind", kind, "2 or 3")->required();
    anchors_cmd->callback([&] {
        action = [&] {
            print_ids(c.out, anchors(embed(load(c, file)), kind_of(kind)));
            return kOk;
        };
    });

    auto* rank_cmd = with_file(app.add_subcommand("rank", "rank of a C2-anchor"));
    rank_cmd->add_option("--element", element)->required();
    rank_cmd->callback([&] {
        action = [&] {
            c.out << rank(embed(load(c, file)), element).value << "\n";
            return kOk;
        };
    });

    auto* scheme_cmd = with_file(app.add_subcommand("scheme", "describe the scheme of an anchor"));
    scheme_cmd->add_option("--anchor", anchor)->required();
    scheme_cmd->add_option("--kind", kind, "2 or 3")->required();
    scheme_cmd->callback([&] {
        action = [&] {
            const Scheme s = scheme(embed(load(c, file)), anchor, kind_of(kind));
            c.out << "kind C" << kind << "\nanchor " << s.anchor << "\nbase ";
            print_ids(c.out, s.base);
            if (s.kind == TrajectoryKind::C2)
            {
                print_links(c.out, "left-wing", s.left_intervals);
                print_links(c.out, "right-wing", s.right_intervals);
            }
            else
            {
                print_links(c.out, "left-wing", s.left_chains);
                print_links(c.out, "right-wing", s.right_chains);
            }
            c.out << "elements ";
            print_ids(c.out, s.elements);
            c.out << "upper-boundary ";
            print_ids(c.out, s.upper_boundary);
            c.out << "lower-boundary ";
            print_ids(c.out, s.lower_boundary);
            c.out << "interior ";
            print_ids(c.out, s.interior);
            return kOk;
        };
    });

    auto surgery_cmd = [&](const char* name, const char* help, auto op) {
        auto* sub = with_file(app.add_subcommand(name, help));
        sub->add_option("--anchor", anchor)->required();
        sub->callback([&, op] {
            action = [&, op] {
                const auto result = op(embed(load(c, file)), anchor);
                write_diagram(c.out, canonical_form(result.diagram));
                return kOk;
            };
        });
    };
    surgery_cmd("resect", "resect at a C3-anchor",
                [](const Embedding& e, ElementId u) { return resect(e, u); });
    surgery_cmd("insert", "insert at a C2-anchor",
                [](const Embedding& e, ElementId u) { return insert(e, u); });

    auto* normalize_cmd =
        with_file(app.add_subcommand("normalize", "minimal-rank insertions until distributive"));
    normalize_cmd->add_option("--trace", trace_out, "write the surgery trace here");
    normalize_cmd->callback([&] {
        action = [&] {
            const Diagram d = load(c, file);
            embed(d);
            const auto trace = normalize(d);
            if (!trace_out.empty())
            {
                std::ofstream t(trace_out);
                if (!t)
                    throw PreconditionError("cannot write " + trace_out);
                for (const auto& step : trace.steps)
                    t << step.record.to_line() << "\n";
            }
            write_diagram(c.out, canonical_form(trace.final));
            return kOk;
        };
    });

    auto* decide = with_file(
        app.add_subcommand("decide", "slim semimodularity by the insertion sequence"));
    decide->callback([&] {
        action = [&] {
            const Diagram d = load(c, file);
            const auto report = validate_well_formed(d);
            if (!report.ok())
            {
                c.out << "not well formed\n" << report.summary();
                return kNegative;
            }
            const bool yes = is_slim_semimodular_via_sequence(d);
            c.out << (yes ? "slim semimodular\n" : "not slim semimodular\n");
            return yes ? kOk : kNegative;
        };
    });

    auto* census_cmd = app.add_subcommand("census", "build and save the census");
    census_cmd->add_option("--max-size", max_size)->required();
    census_cmd->add_option("--out", out_dir)->required();
    census_cmd->callback([&] {
        action = [&] {
            const auto store = census(max_size);
            store.save(out_dir);
            std::map<int, int> by_size;
            for (const auto& [key, r] : store.records())
                ++by_size[r.size];
            for (const auto& [size, count] : by_size)
                c.out << "size " << size << ": " << count << "\n";
            c.out << "total " << store.size() << "\n";
            return kOk;
        };
    });

    auto* theorem = app.add_subcommand(
        "check-theorem", "census members pass the cell criterion; oracle lattices normalize");
    theorem->add_option("--max-size", max_size)->required();
    theorem->add_option("--oracle-max", oracle_max, "largest oracle lattice checked")
        ->capture_default_str();
    theorem->callback([&] {
        action = [&] {
            const auto store = census(max_size);
            std::size_t sound = 0;
            for (const auto& [key, r] : store.records())
                sound += check_gk_criterion(r.diagram);
            std::size_t complete = 0, total = 0;
            for (const auto& p :
                 oracle::enumerate_slim_semimodular_lattices(std::min(max_size, oracle_max)))
            {
                if (p.size() < 2)
                    continue;
                ++total;
                const auto trace = normalize(oracle::embed_slim_lattice(p));
                complete += anchors(Embedding(trace.final), TrajectoryKind::C2).empty() &&
                            oracle::is_distributive(oracle::poset_of(trace.final));
            }
            c.out << "soundness " << sound << "/" << store.size() << "\n"
                  << "completeness " << complete << "/" << total << "\n";
            return sound == store.size() && complete == total ? kOk : kNegative;
        };
    });

    auto* search = app.add_subcommand("search-nondim",
                                      "free-choice insertions that keep the covering-N7 count");
    search->add_option("--max-size", max_size)->required();
    search->add_option("--steps", steps)->required();
    search->callback([&] {
        action = [&] {
            const auto w = find_nondiminishing_sequence(max_size, steps);
            if (!w)
            {
                c.out << "no witness\n";
                return kNegative;
            }
            print_witness(c.out, *w);
            return kOk;
        };
    });

    auto* render_cmd = with_file(app.add_subcommand("render", "draw as DOT or SVG"));
    render_cmd->add_option("-o,--output", out_path)->required();
    render_cmd->add_option("--overlay", overlays,
                           "cells, trajectories, anchors, scheme(<id>[,2|3]), stacked(<id>)");
    render_cmd->add_option("--format", format, "dot or svg (default: from the file extension)")
        ->check(CLI::IsMember({"dot", "svg"}));
    render_cmd->callback([&] {
        action = [&] {
            RenderSpec spec;
            const bool svg = format.empty() ? out_path.ends_with(".svg") : format == "svg";
            spec.format = svg ? RenderFormat::Svg : RenderFormat::Dot;
            for (const auto& o : overlays)
                spec.overlays.push_back(parse_overlay(o));
            const Diagram d = load(c, file);
            embed(d);
            const std::string text = render(d, spec);
            std::ofstream f(out_path);
            if (!f)
                throw PreconditionError("cannot write " + out_path);
            f << text;
            return kOk;
        };
    });

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&)
    {
        c.out << app.help();
        return kOk;
    }
    catch (const CLI::CallForAllHelp&)
    {
        c.out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    }
    catch (const CLI::ParseError& e)
    {
        c.err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try
    {
        return action();
    }
    catch (const ParseError& e)
    {
        c.err << "parse error: " << (file == "-" ? "<stdin>" : file) << ": " << e.what() << "\n";
    }
    catch (const ResourceLimitError& e)
    {
        c.err << "resource limit: " << e.what() << "\n";
    }
    catch (const NonTerminationError& e)
    {
        c.err << "non-termination suspected: " << e.what() << "\n";
    }
    catch (const LatresError& e)
    {
        c.err << "error: " << e.what() << "\n";
    }
    catch (const std::exception& e)
    {
        c.err << "error: " << e.what() << "\n";
    }
    return kUsage;
}

} // namespace latres::cli
