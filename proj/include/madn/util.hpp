#ifndef MADN_UTIL_HPP_
#define MADN_UTIL_HPP_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace madn {

// Input that does not conform to a documented file format. `line` is
// 1-based; 0 means the location is unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Invalid parameter or configuration value.
class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

// Independent stream seed for sub-task `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Uniform double in [0,1) from the top 53 bits of the engine output.
// std::uniform_real_distribution is not pinned by the standard; these are,
// so seeded runs reproduce bit-for-bit.
double uniform_unit(Rng& rng);

// Uniform integer in [0, n).
std::size_t uniform_index(Rng& rng, std::size_t n);

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);
double parse_double(std::string_view text);       // throws ParseError
long long parse_int(std::string_view text);       // throws ParseError

std::vector<std::string_view> split(std::string_view text, char sep);
std::string_view trim(std::string_view text);

// FNV-1a 64-bit content fingerprint (not cryptographic), hex-encoded.
std::uint64_t fnv1a64(std::string_view data);
std::string file_digest(const std::string& path);  // throws on I/O failure

}  // namespace madn

#endif  // MADN_UTIL_HPP_
