#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "szv/perm.hpp"

namespace szv {

// Permutation file: line 1 "<degree> <gencount>", then gencount lines of
// degree space-separated 1-based images.
struct PermFile {
  int degree = 0;
  std::vector<Perm> gens;
};

inline PermFile parse_perm_file(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw Error("perm file: empty input");
  std::istringstream head(line);
  long degree = 0, count = 0;
  std::string junk;
  if (!(head >> degree >> count) || (head >> junk))
    throw Error("perm file line 1: expected \"<degree> <gencount>\"");
  if (degree < 1 || degree > 1000000)
    throw Error("perm file line 1: degree out of range");
  if (count < 0 || count > 10000)
    throw Error("perm file line 1: generator count out of range");
  PermFile out;
  out.degree = static_cast<int>(degree);
  for (long k = 0; k < count; ++k) {
    if (!std::getline(is, line))
      throw Error("perm file line " + std::to_string(k + 2) +
                  ": missing generator line");
    try {
      out.gens.push_back(Perm::parse(line, out.degree));
    } catch (const Error& e) {
      throw Error("perm file line " + std::to_string(k + 2) + ": " +
                  e.what());
    }
  }
  while (std::getline(is, line))
    for (char c : line)
      if (!isspace(static_cast<unsigned char>(c)))
        throw Error("perm file: trailing content after generators");
  return out;
}

inline std::string serialize_perm_file(const PermFile& f) {
  std::ostringstream os;
  os << f.degree << ' ' << f.gens.size() << '\n';
  for (const Perm& g : f.gens) os << g.str() << '\n';
  return os.str();
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline PermFile load_perm_file(const std::string& path) {
  try {
    return parse_perm_file(read_text_file(path));
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace szv
