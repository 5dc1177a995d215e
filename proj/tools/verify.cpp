#include <iostream>

#include "ellident/catalog.hpp"
#include "ellident/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    ellident::CliParseResult parsed = ellident::parse_args(args);
    if (parsed.exit_now) {
        (parsed.exit_code == 0 ? std::cout : std::cerr) << parsed.output;
        return parsed.exit_code;
    }
    try {
        ellident::VerificationReport report =
            ellident::run_suite(parsed.config.suite_filters, parsed.config.suite_config());
        return ellident::emit_report(report, parsed.config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
