#include "triwise/family_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "triwise/error.hpp"
#include "triwise/report_json.hpp"

namespace triwise {

namespace {

std::string_view strip(std::string_view s) {
  if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::size_t line_no) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

SetFamily parse_family_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  int n = -1;
  std::vector<Subset> members;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = strip(raw);
    if (line.empty()) continue;
    if (n < 0) {
      if (line.substr(0, 2) != "n=") throw ParseError("line " + std::to_string(line_no) + ": expected 'n=<int>'");
      n = parse_int(line.substr(2), line_no);
      if (n < 0 || n > kMaxGroundSize) throw ParseError("n out of range");
      continue;
    }
    if (line == "-") {
      members.push_back(Subset::empty(n));
      continue;
    }
    std::vector<int> elems;
    std::string_view rest = line;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      elems.push_back(parse_int(rest.substr(0, comma), line_no));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    try {
      members.push_back(Subset::from_elements(n, elems));
    } catch (const DomainError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (n < 0) throw ParseError("missing 'n=<int>' header");
  return SetFamily(n, std::move(members));
}

std::string format_family_text(const SetFamily& family) {
  std::string out = "n=" + std::to_string(family.ground_size()) + "\n";
  for (const auto& m : family.members()) {
    if (m.size() == 0) {
      out += "-\n";
      continue;
    }
    bool first = true;
    for (int e : m.elements()) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
    out += '\n';
  }
  return out;
}

SetFamily parse_family_document(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return family_from_json_document(text);
  return parse_family_text(text);
}

SetFamily read_family_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open family file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_family_document(buf.str());
}

void write_family_file(const std::filesystem::path& path, const SetFamily& family) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write family file '" + path.string() + "'");
  out << format_family_text(family);
}

}  // namespace triwise
