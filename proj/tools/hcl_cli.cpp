// Command-line front end: classgroup | compose | verify | dual | examples.

#include "hcl/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace hcl;

namespace {

Envelope read_input(std::string const & path)
{
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return parse_envelope(os.str());
    }
    return load_envelope(path);
}

}  // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Exact higher composition laws: class groups, compositions, identity checks"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "Print the report as JSON");

    std::string disc_text, in_path, law;
    auto * classgroup = app.add_subcommand("classgroup", "Class group of primitive forms of a discriminant");
    classgroup->add_option("--discriminant,-D", disc_text, "Discriminant")->required();

    auto * compose = app.add_subcommand("compose", "Compose two classes (space bqf, cube, cubic or pair)");
    compose->add_option("--in", in_path, "Envelope file, '-' for stdin");

    auto * verify = app.add_subcommand("verify", "Verify a composition identity");
    verify->add_option("law", law, "gauss | cube | cubic | pair | quat | senary")->required();
    verify->add_option("--in", in_path, "Envelope file, '-' for stdin");
    verify->add_option("--discriminant,-D", disc_text, "Discriminant (senary without --in)");

    auto * dual = app.add_subcommand("dual", "Solve for dual cubes of [A] + [B] + [C] = [id]");
    dual->add_option("--in", in_path, "Envelope file, '-' for stdin");

    std::string fixture_dir = HCL_FIXTURE_DIR;
    auto * examples = app.add_subcommand("examples", "Replay the bundled worked examples");
    examples->add_option("--dir", fixture_dir, "Fixture directory");

    for (auto * sub : {classgroup, compose, verify, dual, examples})
        sub->add_flag("--json", as_json, "Print the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Report report;
    try {
        if (*classgroup)
            report = run_guarded("classgroup", [&] { return cmd_classgroup(parse_bigint(disc_text)); });
        else if (*compose)
            report = run_guarded("compose", [&] { return cmd_compose(read_input(in_path)); });
        else if (*verify)
            report = run_guarded("verify " + law, [&] {
                if (law == "senary" && in_path.empty()) {
                    Envelope e{"senary"};
                    e.discriminant = parse_bigint(disc_text);
                    return cmd_verify(law, e);
                }
                return cmd_verify(law, read_input(in_path));
            });
        else if (*dual)
            report = run_guarded("dual", [&] { return cmd_dual(read_input(in_path)); });
        else
            report = run_guarded("examples", [&] { return cmd_examples(fixture_dir); });
    } catch (std::exception const & e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }

    if (as_json)
        std::cout << report.to_json().dump(2) << '\n';
    else
        std::cout << report.to_text();
    return report.exit_code;
}
