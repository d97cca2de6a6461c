#include "glatt/lattice_io.hpp"

#include "glatt/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct SourceOpts {
    std::string catalog_name;
    std::string input_file;
    std::string format = "text";
    std::string mode = "strict";
    std::size_t rank_bound = 0;
    long coeff_bound = 3;
    bool strict_exit = false;
};

void add_source_options(CLI::App* cmd, SourceOpts& o) {
    cmd->add_option("name", o.catalog_name, "catalog entry (see `catalog list`)");
    cmd->add_option("--input", o.input_file, "lattice JSON file");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
}

void add_search_options(CLI::App* cmd, SourceOpts& o) {
    cmd->add_option("--mode", o.mode, "flabby/coflabby mode")
        ->check(CLI::IsMember({"strict", "paper-literal"}));
    cmd->add_option("--rank-bound", o.rank_bound, "stable search rank bound (0 = automatic)");
    cmd->add_option("--coeff-bound", o.coeff_bound, "witness search coefficient bound");
    cmd->add_flag("--strict-exit", o.strict_exit, "exit 1 on undetermined outcomes");
}

// loads from --input when given, else from the catalog name
glatt::GLattice load_lattice(const SourceOpts& o, std::string& name) {
    if (!o.input_file.empty()) {
        std::ifstream in(o.input_file, std::ios::binary);
        if (!in)
            throw glatt::ParseError("cannot read '" + o.input_file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return glatt::parse_lattice_file(buf.str(), &name);
    }
    if (!o.catalog_name.empty()) {
        auto entry = glatt::catalog_get(o.catalog_name);
        name = entry.name;
        return entry.character_lattice;
    }
    throw glatt::ValidationError("no input: pass a catalog name or --input FILE");
}

glatt::Mode parse_mode(const std::string& m) {
    return m == "paper-literal" ? glatt::Mode::PaperLiteral : glatt::Mode::Strict;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of algebraic tori by their character G-lattices"};
    app.require_subcommand(1);

    SourceOpts coh_opts;
    CLI::App* coh = app.add_subcommand("cohomology", "print H^1 and Tate^-1 profiles");
    add_source_options(coh, coh_opts);

    SourceOpts cls_opts;
    CLI::App* cls =
        app.add_subcommand("classify", "class verdicts and the rationality report");
    add_source_options(cls, cls_opts);
    add_search_options(cls, cls_opts);

    SourceOpts res_opts;
    CLI::App* res = app.add_subcommand("resolve", "flabby resolution with verification");
    add_source_options(res, res_opts);

    CLI::App* cat = app.add_subcommand("catalog", "built-in torus catalog");
    cat->require_subcommand(1);
    CLI::App* cat_list = cat->add_subcommand("list", "list entry names");
    std::string show_name;
    std::string cat_format = "text";
    CLI::App* cat_show = cat->add_subcommand("show", "show one entry");
    cat_show->add_option("name", show_name, "entry name")->required();
    cat_show->add_option("--format", cat_format)->check(CLI::IsMember({"json", "text"}));

    std::string validate_file;
    CLI::App* val = app.add_subcommand("validate", "validate a lattice JSON file");
    val->add_option("--input", validate_file, "lattice JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (coh->parsed()) {
            std::string name;
            auto m = load_lattice(coh_opts, name);
            if (coh_opts.format == "json")
                std::cout << glatt::cohomology_to_json(m, name).dump(2) << "\n";
            else
                std::cout << glatt::cohomology_to_text(m, name);
            return 0;
        }
        if (cls->parsed()) {
            std::string name;
            auto m = load_lattice(cls_opts, name);
            glatt::SearchOptions opt;
            opt.rank_bound = cls_opts.rank_bound;
            opt.coeff_bound = cls_opts.coeff_bound;
            auto result = glatt::classify_lattice(m, parse_mode(cls_opts.mode), opt);
            if (cls_opts.format == "json")
                std::cout << glatt::classification_to_json(m, name, result).dump(2) << "\n";
            else
                std::cout << glatt::classification_to_text(m, name, result);
            if (cls_opts.strict_exit &&
                result.report.level == glatt::RationalityLevel::Undetermined)
                return 1;
            return 0;
        }
        if (res->parsed()) {
            std::string name;
            auto m = load_lattice(res_opts, name);
            auto resolution = glatt::flabby_resolution(m);
            bool verified = glatt::verify_resolution(resolution);
            if (res_opts.format == "json")
                std::cout << glatt::resolution_to_json(m, name, resolution, verified).dump(2)
                          << "\n";
            else
                std::cout << glatt::resolution_to_text(m, name, resolution, verified);
            return 0;
        }
        if (cat_list->parsed()) {
            for (const auto& n : glatt::catalog_names())
                std::cout << n << "\n";
            return 0;
        }
        if (cat_show->parsed()) {
            auto entry = glatt::catalog_get(show_name);
            if (cat_format == "json") {
                glatt::ordered_json j;
                j["name"] = entry.name;
                j["narrative"] = entry.narrative;
                j["expected_level"] = glatt::to_string(entry.expected_level);
                j["expected_summary"] = entry.expected_summary;
                j["lattice"] =
                    glatt::ordered_json::parse(glatt::serialize_lattice(entry.character_lattice,
                                                                        entry.name));
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << entry.name << "\n" << entry.narrative << "\n";
                std::cout << "expected: " << glatt::to_string(entry.expected_level) << " ("
                          << entry.expected_summary << ")\n";
                std::cout << glatt::serialize_lattice(entry.character_lattice, entry.name);
            }
            return 0;
        }
        if (val->parsed()) {
            std::ifstream in(validate_file, std::ios::binary);
            if (!in)
                throw glatt::ParseError("cannot read '" + validate_file + "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            std::string name;
            auto m = glatt::parse_lattice_file(buf.str(), &name);
            std::cout << "ok: name=" << name << " rank=" << m.rank()
                      << " group_order=" << m.group().order() << "\n";
            return 0;
        }
    } catch (const glatt::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const glatt::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
