#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace orbizeta::cli {

enum class Format { Table, Json };

struct CommandResult {
  int exit_code = 0;  // 0 ok, 1 a requested verification failed, 2 input error
  std::string out;
  std::string err;
};

struct ZetaOptions {
  std::size_t traces = 0;
  bool verify = false;
  bool recover = false;
  std::optional<std::int64_t> q;  // overrides the document's base field
  std::int64_t verify_max_r = 3;
  Format format = Format::Table;
};

struct RingOptions {
  bool verify_frobenius = false;
  bool negative_control = false;
};

CommandResult cmd_inertia(const std::string& spec_path, Format format);
CommandResult cmd_zeta(const std::string& spec_path, const ZetaOptions& options);
CommandResult cmd_ring(const std::string& spec_path, const RingOptions& options);
CommandResult cmd_compare(const std::string& spec_path, const std::string& zeta_path);

}  // namespace orbizeta::cli
