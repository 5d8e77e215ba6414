#include "hoops/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hoops {

namespace {

using nlohmann::json;

SquareTable table_from_json(json const& j, int n, char const* field) {
  if (!j.is_array() || int(j.size()) != n)
    throw InputError(std::string(field) + ": expected " + std::to_string(n) + " rows");
  SquareTable t(n);
  for (int x = 0; x < n; ++x) {
    if (!j[x].is_array() || int(j[x].size()) != n)
      throw InputError(std::string(field) + ": row " + std::to_string(x) + " has wrong length");
    for (int y = 0; y < n; ++y) {
      if (!j[x][y].is_number_integer())
        throw InputError(std::string(field) + ": non-integer entry at (" + std::to_string(x)
                         + "," + std::to_string(y) + ")");
      t(x, y) = j[x][y].get<int>();
    }
  }
  return t;
}

HoopInput parse_json(std::string const& text, std::string const& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (json::parse_error const& e) {
    throw InputError(origin + ": " + e.what());
  }
  if (!j.is_object()) throw InputError(origin + ": expected a JSON object");
  HoopInput in;
  if (!j.contains("size") || !j["size"].is_number_integer())
    throw InputError(origin + ": missing integer field \"size\"");
  in.size = j["size"].get<int>();
  if (in.size < 1) throw InputError(origin + ": \"size\" must be positive");
  if (in.size > MAX_SIZE) throw InputError(origin + ": \"size\" exceeds 64");
  if (!j.contains("unit") || !j["unit"].is_number_integer())
    throw InputError(origin + ": missing integer field \"unit\"");
  in.unit = j["unit"].get<int>();
  if (!j.contains("prod")) throw InputError(origin + ": missing field \"prod\"");
  in.prod = table_from_json(j["prod"], in.size, "prod");
  if (j.contains("rimp")) in.rimp = table_from_json(j["rimp"], in.size, "rimp");
  if (j.contains("limp")) in.limp = table_from_json(j["limp"], in.size, "limp");
  if (j.contains("leq")) {
    auto const& lj = j["leq"];
    if (!lj.is_array() || int(lj.size()) != in.size)
      throw InputError(origin + ": leq: expected " + std::to_string(in.size) + " rows");
    std::vector<Mask> up(size_t(in.size), 0);
    for (int x = 0; x < in.size; ++x) {
      if (!lj[x].is_array() || int(lj[x].size()) != in.size)
        throw InputError(origin + ": leq: row " + std::to_string(x) + " has wrong length");
      for (int y = 0; y < in.size; ++y) {
        if (!lj[x][y].is_boolean() && !lj[x][y].is_number_integer())
          throw InputError(origin + ": leq: entry (" + std::to_string(x) + ","
                           + std::to_string(y) + ") is not boolean");
        bool v = lj[x][y].is_boolean() ? lj[x][y].get<bool>() : lj[x][y].get<int>() != 0;
        if (v) up[size_t(x)] |= bit_of(y);
      }
    }
    in.leq = std::move(up);
  }
  if (j.contains("zero")) {
    if (!j["zero"].is_number_integer()) throw InputError(origin + ": \"zero\" must be an integer");
    in.zero = j["zero"].get<int>();
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError(origin + ": \"name\" must be a string");
    in.name = j["name"].get<std::string>();
  }
  if (!in.rimp && !in.limp && !in.leq)
    throw InputError(origin + ": one of \"rimp\", \"limp\", \"leq\" is required");
  return in;
}

HoopInput parse_text(std::string const& text, std::string const& origin) {
  std::istringstream is(text);
  std::string word;
  if (!(is >> word) || word != "hoop")
    throw InputError(origin + ": expected header `hoop <size> <unit> [zero]`");
  HoopInput in;
  if (!(is >> in.size)) throw InputError(origin + ": missing size in header");
  if (in.size < 1 || in.size > MAX_SIZE) throw InputError(origin + ": bad size");
  if (!(is >> in.unit)) throw InputError(origin + ": missing unit in header");
  // the optional zero is distinguished from the first table entry by
  // reading the rest of the header line
  std::string rest;
  std::getline(is, rest);
  std::istringstream hr(rest);
  int z;
  if (hr >> z) in.zero = z;
  auto read_block = [&](char const* field) {
    SquareTable t(in.size);
    for (int x = 0; x < in.size; ++x)
      for (int y = 0; y < in.size; ++y)
        if (!(is >> t(x, y)))
          throw InputError(origin + ": " + field + ": truncated at row " + std::to_string(x));
    return t;
  };
  in.prod = read_block("prod");
  in.rimp = read_block("rimp");
  in.limp = read_block("limp");
  return in;
}

json table_to_json(SquareTable const& t) {
  json rows = json::array();
  for (int x = 0; x < t.dim(); ++x) {
    json row = json::array();
    for (int y = 0; y < t.dim(); ++y) row.push_back(t(x, y));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

HoopInput parse_algebra_input(std::string const& text, std::string const& origin) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? parse_json(text, origin) : parse_text(text, origin);
  }
  throw InputError(origin + ": empty input");
}

FiniteHoop parse_algebra(std::string const& text, std::string const& origin) {
  auto res = validate(parse_algebra_input(text, origin));
  if (!res.ok()) {
    std::string msg = origin + ": not a pseudo hoop;";
    int shown = 0;
    for (auto const& v : res.violations) {
      if (shown++ == 5) {
        msg += " ... (" + std::to_string(res.violations.size()) + " violations)";
        break;
      }
      msg += " axiom " + v.axiom + " at (" + std::to_string(v.x) + "," + std::to_string(v.y)
             + "," + std::to_string(v.z) + ");";
    }
    throw InputError(msg);
  }
  return std::move(*res.hoop);
}

std::string read_file(std::string const& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(std::string const& path, std::string const& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << content;
}

FiniteHoop load_algebra(std::string const& path) {
  return parse_algebra(read_file(path), path);
}

std::string to_json(FiniteHoop const& M) {
  json j;
  if (!M.name().empty()) j["name"] = M.name();
  j["size"] = M.size();
  j["unit"] = M.unit();
  if (M.zero()) j["zero"] = *M.zero();
  j["prod"] = table_to_json(M.prod_table());
  j["rimp"] = table_to_json(M.rimp_table());
  j["limp"] = table_to_json(M.limp_table());
  return j.dump(2) + "\n";
}

std::string to_text(FiniteHoop const& M) {
  std::ostringstream os;
  os << "hoop " << M.size() << ' ' << M.unit();
  if (M.zero()) os << ' ' << *M.zero();
  os << '\n';
  auto dump = [&](SquareTable const& t) {
    for (int x = 0; x < t.dim(); ++x) {
      for (int y = 0; y < t.dim(); ++y) os << (y ? " " : "") << t(x, y);
      os << '\n';
    }
  };
  dump(M.prod_table());
  os << '\n';
  dump(M.rimp_table());
  os << '\n';
  dump(M.limp_table());
  return os.str();
}

void save_algebra(FiniteHoop const& M, std::string const& path) {
  bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  write_file(path, is_json ? to_json(M) : to_text(M));
}

}  // namespace hoops
