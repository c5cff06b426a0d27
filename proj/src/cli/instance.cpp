#include "rees/cli/instance.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "rees/errors.hpp"
#include "rees/poly_io.hpp"

namespace rees {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void format_error(int line, const std::string& msg) {
  throw Error(ErrorKind::Format, "line " + std::to_string(line) + ": " + msg);
}

std::uint32_t parse_prime(std::string_view digits) {
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || p >= (1ull << 31)) {
    throw Error(ErrorKind::InvalidRing, "bad characteristic '" + std::string(digits) + "'");
  }
  return static_cast<std::uint32_t>(p);
}

}  // namespace

FieldSpec parse_field(std::string_view text) {
  text = strip(text);
  if (text == "Q") return FieldSpec::rationals();
  if (text.starts_with("Fp")) {
    std::string_view rest = text.substr(2);
    if (!rest.empty() && (rest.front() == '=' || rest.front() == ' ')) {
      FieldSpec spec = FieldSpec::prime(parse_prime(strip(rest.substr(1))));
      if (!is_prime(spec.p)) throw Error(ErrorKind::InvalidRing, std::to_string(spec.p) + " is not prime");
      return spec;
    }
  }
  throw Error(ErrorKind::InvalidRing, "unknown field '" + std::string(text) + "' (use Q or Fp <prime>)");
}

InstanceFile parse_instance_text(std::string_view text) {
  std::map<std::string, std::pair<std::string, int>> values;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = strip(raw);
    if (s.empty() || s.front() == '#') continue;
    auto eq = s.find('=');
    if (eq == std::string_view::npos) format_error(line, "expected 'key = value'");
    std::string key(strip(s.substr(0, eq)));
    std::string value(strip(s.substr(eq + 1)));
    if (key != "mode" && key != "n" && key != "field" && key != "f" && key != "g") {
      format_error(line, "unknown key '" + key + "'");
    }
    if (values.contains(key)) format_error(line, "duplicate key '" + key + "'");
    if (value.empty()) format_error(line, "empty value for '" + key + "'");
    values[key] = {value, line};
  }
  for (const char* key : {"mode", "n", "f", "g"}) {
    if (!values.contains(key)) format_error(line + 1, std::string("missing key '") + key + "'");
  }

  InstanceFile file;
  const auto& [mode, mode_line] = values["mode"];
  if (mode == "standard") {
    file.mode = Mode::Standard;
  } else if (mode == "generalized") {
    file.mode = Mode::Generalized;
  } else {
    format_error(mode_line, "mode must be standard or generalized");
  }
  const auto& [n, n_line] = values["n"];
  auto [ptr, ec] = std::from_chars(n.data(), n.data() + n.size(), file.n);
  if (ec != std::errc() || ptr != n.data() + n.size()) format_error(n_line, "n must be an integer");
  if (values.contains("field")) {
    try {
      file.field = parse_field(values["field"].first);
    } catch (const Error& e) {
      format_error(values["field"].second, e.what());
    }
  }
  file.f = values["f"].first;
  file.g = values["g"].first;
  return file;
}

InstanceFile read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

namespace {

template <class K>
DeJonquieresMap<K> build(const InstanceFile& file, const Budget& budget) {
  RingSpec spec{file.mode, file.n, file.field};
  RingPtr<K> ring = make_ring<K>(spec);
  return validate_map(parse_poly<K>(file.f, ring), parse_poly<K>(file.g, ring), budget);
}

}  // namespace

AnyMap load_instance(const InstanceFile& file, const Budget& budget) {
  if (file.field.is_prime()) return build<PrimeField>(file, budget);
  return build<RationalField>(file, budget);
}

}  // namespace rees
