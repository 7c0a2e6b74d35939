// HTTP/JSON service: POST /assess, /map-weights, /contours and GET /case-study.

#include <cstdio>

#include "CLI11.hpp"

#include "brmcda/service.hpp"

int main(int argc, char** argv) {
    brmcda::service::Config config;
    CLI::App app{"Benefit-risk assessment service"};
    app.add_option("--host", config.host, "Bind address")->envname("BRMCDA_HOST");
    app.add_option("--port", config.port, "Port")->envname("BRMCDA_PORT")->check(CLI::Range(1, 65535));
    app.add_option("--workers", config.workers, "Request worker threads")
        ->envname("BRMCDA_WORKERS")
        ->check(CLI::PositiveNumber);
    app.add_option("--sample-cap", config.sample_cap, "Largest samples value accepted by /assess")
        ->envname("BRMCDA_SAMPLE_CAP")
        ->check(CLI::PositiveNumber);
    app.add_option("--static", config.static_dir, "Directory of web assets served at /")
        ->envname("BRMCDA_STATIC");
    CLI11_PARSE(app, argc, argv);

    try {
        std::fprintf(stderr, "listening on %s:%d (%u workers, sample cap %zu)\n",
                     config.host.c_str(), config.port, config.workers, config.sample_cap);
        if (!brmcda::service::serve(config)) {
            std::fprintf(stderr, "error: cannot bind %s:%d\n", config.host.c_str(), config.port);
            return 1;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
