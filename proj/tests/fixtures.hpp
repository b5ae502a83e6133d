#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "rotor/graph.hpp"
#include "rotor/rotor_system.hpp"

namespace rotor::fixtures {

// Five vertices, targets {4,5}: the running example of the entire test suite.
// Mechanisms 1:[3,4,5], 2:[3], 3:[4,2]; only possible rotor cycle is (2,3).
inline RotorSystem g5() {
    GraphSpec spec;
    spec.vertices = {"1", "2", "3", "4", "5"};
    spec.source = "1";
    spec.targets = {"4", "5"};
    spec.rotors = {{"1", {"3", "4", "5"}}, {"2", {"3"}}, {"3", {"4", "2"}}};
    return RotorSystem(std::make_shared<Multigraph>(Multigraph::build(spec)));
}

// Four vertices, targets {3,4}; every mechanism repeats each head twice, so
// hitting words come in pairs: 3,3,3,3,4,4 from the all-slot-d start.
inline RotorSystem repetitive2() {
    GraphSpec spec;
    spec.vertices = {"1", "2", "3", "4"};
    spec.source = "1";
    spec.targets = {"3", "4"};
    spec.rotors = {{"1", {"3", "3", "2", "2"}}, {"2", {"1", "1", "4", "4"}}};
    return RotorSystem(std::make_shared<Multigraph>(Multigraph::build(spec)));
}

// Generic builder for one-off shapes inside a test.
inline RotorSystem make_system(std::vector<std::string> vertices, std::string source,
                               std::vector<std::string> targets,
                               std::vector<std::pair<std::string, std::vector<std::string>>> rotors) {
    GraphSpec spec;
    spec.vertices = std::move(vertices);
    spec.source = std::move(source);
    spec.targets = std::move(targets);
    spec.rotors = std::move(rotors);
    return RotorSystem(std::make_shared<Multigraph>(Multigraph::build(spec)));
}

// Same, but skipping the connectivity requirement.
inline RotorSystem make_unchecked(std::vector<std::string> vertices, std::string source,
                                  std::vector<std::string> targets,
                                  std::vector<std::pair<std::string, std::vector<std::string>>> rotors) {
    GraphSpec spec;
    spec.vertices = std::move(vertices);
    spec.source = std::move(source);
    spec.targets = std::move(targets);
    spec.rotors = std::move(rotors);
    return RotorSystem(std::make_shared<Multigraph>(Multigraph::build_unchecked(spec)));
}

// Rotor slots listed by dense non-target index.
inline RotorConfiguration config(std::vector<int> slots) {
    return RotorConfiguration{std::move(slots)};
}

}  // namespace rotor::fixtures
