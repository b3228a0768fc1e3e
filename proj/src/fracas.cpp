#include "anota/fracas.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace anota {

namespace {

std::string unescape(const std::string& s) {
  std::string out;
  for (size_t i = 0; i < s.size();) {
    if (s[i] == '&') {
      size_t semi = s.find(';', i);
      if (semi != std::string::npos && semi - i <= 6) {
        std::string ent = s.substr(i + 1, semi - i - 1);
        i = semi + 1;
        if (ent == "amp") out += '&';
        else if (ent == "lt") out += '<';
        else if (ent == "gt") out += '>';
        else if (ent == "quot") out += '"';
        else if (ent == "apos") out += '\'';
        else out += '&' + ent + ';';
        continue;
      }
    }
    out += s[i++];
  }
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  std::string t = s.substr(a, b - a + 1);
  std::string out;
  bool space = false;
  for (char c : t) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      space = true;
      continue;
    }
    if (space && !out.empty()) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

std::string attr(const std::string& tag, const std::string& name) {
  size_t pos = tag.find(name + "=\"");
  if (pos == std::string::npos) return "";
  size_t start = pos + name.size() + 2;
  size_t end = tag.find('"', start);
  if (end == std::string::npos) return "";
  return tag.substr(start, end - start);
}

// Text inside <elem ...>...</elem>, searching from `from`; npos-safe.
bool element_text(const std::string& body, const std::string& elem, size_t& from,
                  std::string& out) {
  size_t open = body.find("<" + elem, from);
  if (open == std::string::npos) return false;
  size_t open_end = body.find('>', open);
  if (open_end == std::string::npos) return false;
  size_t close = body.find("</" + elem + ">", open_end);
  if (close == std::string::npos) return false;
  out = trim(unescape(body.substr(open_end + 1, close - open_end - 1)));
  from = close + elem.size() + 3;
  return true;
}

}  // namespace

std::vector<FracasProblem> parse_fracas_xml(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FracasError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();

  std::vector<FracasProblem> out;
  size_t pos = 0;
  while (true) {
    size_t open = text.find("<problem", pos);
    if (open == std::string::npos) break;
    size_t open_end = text.find('>', open);
    if (open_end == std::string::npos) throw FracasError("unterminated <problem> tag");
    std::string tag = text.substr(open, open_end - open);
    size_t close = text.find("</problem>", open_end);
    if (close == std::string::npos) throw FracasError("missing </problem>");
    std::string body = text.substr(open_end + 1, close - open_end - 1);
    pos = close + 10;

    FracasProblem p;
    std::string id = attr(tag, "id");
    if (id.empty()) throw FracasError("problem without id");
    p.id = std::stoi(id);
    p.answer = attr(tag, "fracas_answer");
    if (p.answer.empty()) p.answer = "undef";
    size_t cursor = 0;
    std::string t;
    while (element_text(body, "p", cursor, t)) p.premises.push_back(t);
    cursor = 0;
    if (element_text(body, "h", cursor, t)) p.hypothesis = t;
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(),
            [](const FracasProblem& a, const FracasProblem& b) { return a.id < b.id; });
  return out;
}

std::vector<FracasProblem> fracas_range(const std::vector<FracasProblem>& all, int lo, int hi) {
  std::vector<FracasProblem> out;
  for (const auto& p : all) {
    if (p.id >= lo && p.id <= hi) out.push_back(p);
  }
  return out;
}

std::map<std::string, int> fracas_answer_counts(const std::vector<FracasProblem>& problems) {
  std::map<std::string, int> counts;
  for (const auto& p : problems) {
    if (p.answer != "undef") ++counts[p.answer];
  }
  return counts;
}

}  // namespace anota
