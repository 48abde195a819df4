#include "nrprop/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace nrprop {

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), errc::io_failure, "cannot open " + path + " for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  require(static_cast<bool>(out), errc::io_failure, "cannot open " + path + " for writing");
  return out;
}

}  // namespace

void save_code(const Code& c, const std::string& path) {
  std::ofstream out = open_out(path);
  out << c.length() << ' ' << c.size() << "\n";
  for (word_t w : c.words()) out << word_to_string(w, c.length()) << "\n";
  require(static_cast<bool>(out), errc::io_failure, "write failed: " + path);
}

Code load_code(const std::string& path) {
  std::ifstream in = open_in(path);
  int n = 0;
  std::size_t m = 0;
  require(static_cast<bool>(in >> n >> m), errc::io_failure, "malformed code header in " + path);
  std::vector<word_t> words;
  words.reserve(m);
  std::string line;
  for (std::size_t i = 0; i < m; ++i) {
    require(static_cast<bool>(in >> line), errc::io_failure, "truncated code file " + path);
    int wn = 0;
    word_t w = word_from_string(line, &wn);
    require(wn == n, errc::io_failure, "word length mismatch in " + path);
    words.push_back(w);
  }
  Code c(n, std::move(words));
  require(c.size() == m, errc::io_failure, "duplicate words in code file " + path);
  return c;
}

void save_z4_code(const Z4Code& c, const std::string& path) {
  std::ofstream out = open_out(path);
  out << c.length << ' ' << c.elements.size() << "\n";
  for (const Z4Word& z : c.elements) {
    for (int i = 0; i < c.length; ++i) {
      if (i) out << ' ';
      out << static_cast<int>(z.digits[static_cast<std::size_t>(i)]);
    }
    out << "\n";
  }
  require(static_cast<bool>(out), errc::io_failure, "write failed: " + path);
}

Z4Code load_z4_code(const std::string& path) {
  std::ifstream in = open_in(path);
  int n = 0;
  std::size_t m = 0;
  require(static_cast<bool>(in >> n >> m), errc::io_failure, "malformed Z4 header in " + path);
  Z4Code c;
  c.length = n;
  for (std::size_t i = 0; i < m; ++i) {
    Z4Word z;
    z.length = n;
    z.digits.resize(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) {
      int v = -1;
      require(static_cast<bool>(in >> v) && v >= 0 && v <= 3, errc::io_failure, "bad Z4 digit in " + path);
      z.digits[static_cast<std::size_t>(d)] = static_cast<std::uint8_t>(v);
    }
    c.elements.push_back(std::move(z));
  }
  std::sort(c.elements.begin(), c.elements.end());
  return c;
}

void save_perms(const std::vector<Perm>& perms, int n, const std::string& path) {
  std::ofstream out = open_out(path);
  for (const Perm& p : perms) out << perm_to_string(p, n) << "\n";
  require(static_cast<bool>(out), errc::io_failure, "write failed: " + path);
}

std::vector<Perm> load_perms(const std::string& path, int n) {
  std::ifstream in = open_in(path);
  std::vector<Perm> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(perm_from_string(line, n));
  }
  return out;
}

void save_structure(const PropStructure& s, const std::string& path) {
  std::ofstream out = open_out(path);
  out << s.code.length() << ' ' << s.order() << "\n";
  for (std::size_t i = 0; i < s.order(); ++i) {
    out << word_to_string(s.code[i], s.code.length()) << "\n";
    out << perm_to_string(s.perm_of[i], s.code.length()) << "\n";
  }
  require(static_cast<bool>(out), errc::io_failure, "write failed: " + path);
}

PropStructure load_structure(const std::string& path) {
  std::ifstream in = open_in(path);
  int n = 0;
  std::size_t m = 0;
  require(static_cast<bool>(in >> n >> m), errc::io_failure, "malformed structure header in " + path);
  std::string line;
  std::getline(in, line);
  std::vector<Auto> elems;
  elems.reserve(m);
  std::vector<word_t> words;
  words.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::string word_line, perm_line;
    require(static_cast<bool>(std::getline(in, word_line)) && static_cast<bool>(std::getline(in, perm_line)),
            errc::io_failure, "truncated structure file " + path);
    int wn = 0;
    word_t w = word_from_string(word_line, &wn);
    require(wn == n, errc::io_failure, "word length mismatch in " + path);
    elems.push_back({w, perm_from_string(perm_line, n)});
    words.push_back(w);
  }
  return structure_from_elements(Code(n, std::move(words)), elems);
}

void save_partition(const Partition& p, const std::string& base_path, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "blocks=8\n";
  out << "base=" << base_path << "\n";
  for (word_t t : p.translators) out << word_to_string(t, p.base.length()) << "\n";
  require(static_cast<bool>(out), errc::io_failure, "write failed: " + path);
}

Partition load_partition(const std::string& path, const CosetAtlas& atlas) {
  std::ifstream in = open_in(path);
  std::string line;
  require(static_cast<bool>(std::getline(in, line)) && line == "blocks=8", errc::io_failure,
          "malformed partition header in " + path);
  require(static_cast<bool>(std::getline(in, line)) && line.rfind("base=", 0) == 0, errc::io_failure,
          "missing base manifest line in " + path);
  Partition p;
  p.base = atlas.base.base;
  std::array<word_t, 7> t{};
  for (int i = 0; i < 7; ++i) {
    require(static_cast<bool>(std::getline(in, line)), errc::io_failure, "truncated partition file " + path);
    int wn = 0;
    t[static_cast<std::size_t>(i)] = word_from_string(line, &wn);
    require(wn == p.base.length(), errc::io_failure, "translator length mismatch in " + path);
  }
  std::sort(t.begin(), t.end());
  p.translators = t;
  // derive the plane from the translator labels
  std::array<std::uint8_t, 7> lines{};
  for (int i = 0; i < 7; ++i)
    lines[static_cast<std::size_t>(i)] =
        atlas.subset_of_coset[static_cast<std::size_t>(atlas.coset_index(t[static_cast<std::size_t>(i)]))];
  std::sort(lines.begin(), lines.end());
  p.plane.lines = lines;
  return p;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in = open_in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out = open_out(path);
  out << content;
  require(static_cast<bool>(out), errc::io_failure, "write failed: " + path);
}

}  // namespace nrprop
