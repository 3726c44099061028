// toric-deform: command-line front end for the toric deformation library.
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "toric/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Deformations of semiample hypersurfaces in toric varieties"};
    app.set_help_flag("-h,--help", "Print this help and exit");

    std::string command;
    std::string model_path;
    std::string preset_name;
    std::optional<std::size_t> root;
    std::optional<std::size_t> orientation;
    std::string format = "text";

    app.add_option("command", command, "validate | analyze | roots | deform | cocycle | dims")
        ->required()
        ->check(CLI::IsMember(toric::command_names()));
    auto* model_opt = app.add_option("--model", model_path, "Model JSON file");
    auto* preset_opt = app.add_option("--preset", preset_name, "Built-in model")
                           ->check(CLI::IsMember(toric::preset_names()));
    model_opt->excludes(preset_opt);
    app.add_option("--root", root, "Root index (0-based, from `roots`)");
    app.add_option("--orientation", orientation, "Boundary ray l0 of the 2-cone (1-based ray index)")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    toric::Model model;
    try {
        if (!model_path.empty()) model = toric::load_model(model_path);
        else if (!preset_name.empty()) model = toric::preset(preset_name);
        else {
            std::cerr << "error: one of --model or --preset is required\n" << app.help();
            return 2;
        }
    } catch (const toric::ModelParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const toric::DomainError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }

    toric::CommandOptions opts;
    opts.root = root;
    if (orientation) {
        if (*orientation > model.fan.ray_count()) {
            std::cerr << "error: --orientation " << *orientation << " exceeds the ray count\n";
            return 2;
        }
        opts.orientation = *orientation - 1;
    }

    try {
        const auto report = toric::run_command(command, model, opts);
        if (format == "json") std::cout << report.dump(2) << "\n";
        else std::cout << toric::render_text(report);
    } catch (const toric::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
