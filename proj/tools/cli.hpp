#ifndef TFKERNEL_CLI_HPP
#define TFKERNEL_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tfkernel/signal.hpp"
#include "tfkernel/tensor.hpp"

namespace tfk::cli {

inline constexpr const char* kToolName = "tfkernel";
inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,        ///< parse or validation failure
    kPrecondition = 3, ///< NotAFrame / DensityTooLow
};

/// Malformed input, config or flag. Maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Run parameters after merging the JSON config with command-line flags.
/// `permutation` is "id", a catalog name c0..c6, or a comma list such as "1,3,2,4";
/// an empty exponent list means "all 2" at the arity of the input.
struct RunConfig {
    std::size_t n = 8;
    std::size_t a = 2;
    std::size_t b = 2;
    std::string window = "gaussian";
    std::string permutation = "id";
    std::vector<std::string> exponents;
    std::uint64_t seed = 42;
    std::string output;

    [[nodiscard]] nlohmann::json to_json() const;
};

/// Reads a config object; unknown keys and ill-typed values are UsageErrors.
[[nodiscard]] RunConfig config_from_json(const nlohmann::json& j);

/// Complex entries of a `re,im` CSV file, in file order.
[[nodiscard]] std::vector<cplx> read_csv(const std::string& path);
void write_csv(const std::string& path, std::span<const cplx> values, const std::string& comment = {});

[[nodiscard]] Signal read_signal(const std::string& path, std::size_t n);
[[nodiscard]] KernelMatrix read_kernel(const std::string& path, std::size_t n);

/// Resolves the permutation spelling against the required arity.
[[nodiscard]] AxisPermutation resolve_permutation(const std::string& spec, std::size_t arity);
/// Resolves the exponent list against the required arity (empty means all 2).
[[nodiscard]] ExponentVector resolve_exponents(const std::vector<std::string>& spec, std::size_t arity);

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tfk::cli

#endif
