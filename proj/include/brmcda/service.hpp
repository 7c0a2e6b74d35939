#pragma once

#include <cstddef>
#include <string>

#include "json.hpp"

namespace httplib {
class Server;
}

namespace brmcda::service {

inline constexpr std::size_t kDefaultSampleCap = 200000;

struct Config {
    std::string host = "127.0.0.1";
    int port = 8080;
    unsigned workers = 4;
    std::size_t sample_cap = kDefaultSampleCap;
    std::string static_dir;  // served at / when non-empty
};

struct Response {
    int status = 200;
    nlohmann::json body;
};

// Handlers take the raw request body so that malformed JSON is reported the
// same way as a bad field. Errors: 400 {error, field} for malformed input,
// 422 {error} when the weights cannot be used by the requested model.
Response assess(const std::string& body, const Config& config);
Response map_weights(const std::string& body);
Response contours(const std::string& body);
Response case_study();

// Registers the routes (and the static mount, if any) on `server`.
void install(httplib::Server& server, const Config& config);

// Blocks until the server stops. Returns false if the address could not be
// bound.
bool serve(const Config& config);

}  // namespace brmcda::service
