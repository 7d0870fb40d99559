// Prints a random valid model file, reproducible from its seed.
#include <cstdint>
#include <iostream>

#include "CLI11.hpp"
#include "model_file.hpp"
#include "skipqn/random_model.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Generate a random model file for testing", "skipqn-fixture"};
    std::uint64_t seed = 1;
    skipqn::RandomModelOptions options;
    app.add_option("--seed", seed, "Random seed")->required();
    app.add_option("--min-stations", options.min_stations)->capture_default_str();
    app.add_option("--max-stations", options.max_stations)->capture_default_str();
    app.add_option("--max-capacity", options.max_capacity)->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    try {
        std::cout << skipqn::cli::model_to_json(skipqn::random_model(seed, options)).dump(2) << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
