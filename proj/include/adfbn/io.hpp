#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "adfbn/dung.hpp"
#include "adfbn/framework.hpp"

namespace adfbn {

enum class InputFormat { apx, adf, bnet };

std::optional<InputFormat> format_from_name(std::string_view name);
/// By file extension.
std::optional<InputFormat> format_from_path(const std::filesystem::path& path);
std::string_view format_name(InputFormat format);

/// `arg(NAME).` and `att(N1,N2).`; `%` starts a comment.
DungFramework parse_apx(std::string_view text);
std::string write_apx(const DungFramework& af);

/// `s(NAME).` and `ac(NAME, F).` with F built from names, c(v), c(f), neg,
/// and, or, imp, iff, xor. Parents are the variables of each condition.
Framework parse_adf(std::string_view text, Validation mode = Validation::strict);
std::string write_adf(const Framework& fr);

/// Optional `targets, factors` header, then `NAME, EXPR` lines over
/// ! & | ( ) 0 1. `#` starts a comment.
Framework parse_bnet(std::string_view text, Validation mode = Validation::lenient);
/// Implications, equivalences and xors are rewritten into ! & |.
std::string write_bnet(const Framework& fr);

struct LoadedInput {
  InputFormat format;
  std::optional<DungFramework> dung;  // set for apx
  Framework framework;
};

LoadedInput parse_input(std::string_view text, InputFormat format);
/// Throws std::runtime_error when the file cannot be read.
LoadedInput load_input(const std::filesystem::path& path, std::optional<InputFormat> format = std::nullopt);
std::string read_file(const std::filesystem::path& path);

}  // namespace adfbn
