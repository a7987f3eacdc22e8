#include "covers/mg_format.hpp"

#include <fstream>
#include <sstream>

namespace covers {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

[[noreturn]] void fail(int lineno, const std::string& msg) {
  throw error("mg parse error at line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

Multigraph parse_mg(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_n = false;
  Multigraph g;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    std::istringstream ss(body);
    std::string tag;
    ss >> tag;
    if (!have_n) {
      if (tag != "n") fail(lineno, "expected 'n <vertex_count>' first");
      long long n = -1;
      if (!(ss >> n) || n < 0) fail(lineno, "bad vertex count");
      std::string extra;
      if (ss >> extra) fail(lineno, "trailing tokens");
      g = Multigraph(static_cast<int>(n));
      have_n = true;
      continue;
    }
    try {
      if (tag == "e") {
        long long u, v;
        if (!(ss >> u >> v)) fail(lineno, "expected 'e <u> <v>'");
        std::string extra;
        if (ss >> extra) fail(lineno, "trailing tokens");
        g.add_normal(static_cast<int>(u), static_cast<int>(v));
      } else if (tag == "l") {
        long long v;
        if (!(ss >> v)) fail(lineno, "expected 'l <v>'");
        std::string extra;
        if (ss >> extra) fail(lineno, "trailing tokens");
        g.add_loop(static_cast<int>(v));
      } else if (tag == "s") {
        long long v;
        if (!(ss >> v)) fail(lineno, "expected 's <v>'");
        std::string extra;
        if (ss >> extra) fail(lineno, "trailing tokens");
        g.add_semi(static_cast<int>(v));
      } else if (tag == "n") {
        fail(lineno, "duplicate 'n' line");
      } else {
        fail(lineno, "unknown tag '" + tag + "'");
      }
    } catch (const error& e) {
      fail(lineno, e.what());
    }
  }
  if (!have_n) throw error("mg parse error: missing 'n' line");
  return g;
}

Multigraph parse_mg(const std::string& text) {
  std::istringstream in(text);
  return parse_mg(in);
}

Multigraph load_mg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open file: " + path);
  return parse_mg(in);
}

std::string serialize_mg(const Multigraph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (const Edge& e : g.edges()) {
    switch (e.kind) {
      case EdgeKind::Normal: out << "e " << e.u << " " << e.v << "\n"; break;
      case EdgeKind::Loop: out << "l " << e.v << "\n"; break;
      case EdgeKind::Semi: out << "s " << e.v << "\n"; break;
    }
  }
  return out.str();
}

std::string to_dot(const Multigraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  int stub = 0;
  for (const Edge& e : g.edges()) {
    switch (e.kind) {
      case EdgeKind::Normal:
        out << "  " << e.u << " -- " << e.v << ";\n";
        break;
      case EdgeKind::Loop:
        out << "  " << e.v << " -- " << e.v << ";\n";
        break;
      case EdgeKind::Semi:
        out << "  __s" << stub << " [style=invis];\n";
        out << "  " << e.v << " -- __s" << stub << ";\n";
        ++stub;
        break;
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace covers
