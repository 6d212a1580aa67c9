#include "formgen/pipeline.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"formgen - compile an XML schema dialect and a style sheet "
                 "into an HTML form page with generated check routines"};
    app.require_subcommand(1);

    formgen::RunConfig config;
    bool watch = false;
    long interval_ms = 500;

    CLI::App* generate = app.add_subcommand(
        "generate", "Generate the HTML page from a schema and a style sheet");
    generate->add_option("--schema", config.schema_path, "Schema input file")->required();
    generate->add_option("--stylesheet", config.stylesheet_path, "Style sheet input file")
        ->required();
    generate->add_option("--out", config.output_path, "Output HTML file")->required();
    generate->add_flag("--watch", watch,
                       "Keep running; regenerate whenever an input file's content changes");
    generate->add_option("--interval", interval_ms,
                         "Watch poll interval in milliseconds (default 500)")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    config.mode = watch ? formgen::RunConfig::Mode::watch : formgen::RunConfig::Mode::once;
    config.poll_interval = std::chrono::milliseconds(interval_ms);

    if (config.mode == formgen::RunConfig::Mode::watch)
        return formgen::run_watch(config, std::cerr);
    return formgen::run_once(config, std::cerr);
}
