#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dagsets {

// Malformed input text. `line` is 1-based and names the offending line.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// The input digraph contains a directed cycle. `cycle` holds one witness,
// listed in arc order (the last vertex has an arc back to the first).
class cycle_error : public std::runtime_error {
public:
    explicit cycle_error(std::vector<int> cycle)
        : std::runtime_error(format(cycle)), cycle_(std::move(cycle)) {}

    const std::vector<int>& cycle() const noexcept { return cycle_; }

private:
    static std::string format(const std::vector<int>& cycle) {
        std::string s = "digraph contains a directed cycle:";
        for (int v : cycle) s += ' ' + std::to_string(v);
        return s;
    }

    std::vector<int> cycle_;
};

// An exhaustive check was asked to sweep more subsets than its cap allows.
class capacity_error : public std::runtime_error {
public:
    capacity_error(int n, int cap)
        : std::runtime_error("instance has " + std::to_string(n) +
                             " vertices, exhaustive cap is " + std::to_string(cap)) {}
};

}  // namespace dagsets
