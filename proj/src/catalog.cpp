#include "closurelab/catalog.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <regex>
#include <sstream>

#include "closurelab/budget.hpp"
#include "closurelab/error.hpp"

#ifndef CLOSURELAB_DEFAULT_DATA_DIR
#define CLOSURELAB_DEFAULT_DATA_DIR "data"
#endif

namespace closurelab {

  namespace {
    Permutation cycle(std::vector<Point> const& pts, std::size_t degree) {
      std::vector<Point> im(degree);
      std::iota(im.begin(), im.end(), Point(0));
      for (std::size_t i = 0; i < pts.size(); ++i) {
        im[pts[i]] = pts[(i + 1) % pts.size()];
      }
      return Permutation(std::move(im));
    }

    std::vector<Point> range(Point from, Point to) {
      std::vector<Point> out;
      for (Point x = from; x < to; ++x) {
        out.push_back(x);
      }
      return out;
    }

    std::uint64_t fnv1a(std::string_view s) {
      std::uint64_t h = 1469598103934665603ULL;
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
      }
      return h;
    }

    std::string trim(std::string_view s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) {
        return "";
      }
      auto e = s.find_last_not_of(" \t\r");
      return std::string(s.substr(b, e - b + 1));
    }

    using Matrix = std::vector<std::vector<FiniteField::Element>>;

    Matrix identity_matrix(std::size_t n) {
      Matrix m(n, std::vector<FiniteField::Element>(n, 0));
      for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1;
      }
      return m;
    }

    Permutation matrix_action(ProjectiveSpace const& P, Matrix const& M) {
      auto const&        F = P.field();
      auto               n = P.dimension();
      std::vector<Point> im(P.size());
      for (Point i = 0; i < P.size(); ++i) {
        auto const&             v = P.point(i);
        ProjectiveSpace::Vector w(n, 0);
        for (std::size_t r = 0; r < n; ++r) {
          if (v[r] == 0) {
            continue;
          }
          for (std::size_t c = 0; c < n; ++c) {
            w[c] = F.add(w[c], F.mul(v[r], M[r][c]));
          }
        }
        im[i] = P.index_of(std::move(w));
      }
      return Permutation(std::move(im));
    }

    struct MathieuSpec {
      char const*   name;
      std::size_t   degree;
      std::uint64_t order;
      std::size_t   transitivity;
    };

    constexpr MathieuSpec mathieu_specs[] = {
        {"M11", 11, 7920, 4},
        {"M12", 12, 95040, 5},
        {"M22", 22, 443520, 3},
        {"M23", 23, 10200960, 4},
        {"M24", 24, 244823040, 5},
    };
  }  // namespace

  PermGroup symmetric(std::size_t n) {
    std::vector<Permutation> gens;
    if (n >= 2) {
      gens.push_back(cycle(range(0, static_cast<Point>(n)), n));
    }
    if (n >= 3) {
      gens.push_back(cycle({0, 1}, n));
    }
    return PermGroup(n, std::move(gens));
  }

  PermGroup alternating(std::size_t n) {
    std::vector<Permutation> gens;
    if (n >= 3) {
      gens.push_back(n % 2 == 1 ? cycle(range(0, static_cast<Point>(n)), n)
                                : cycle(range(1, static_cast<Point>(n)), n));
      gens.push_back(cycle({0, 1, 2}, n));
    }
    return PermGroup(n, std::move(gens));
  }

  PermGroup cyclic(std::size_t n) {
    std::vector<Permutation> gens;
    if (n >= 2) {
      gens.push_back(cycle(range(0, static_cast<Point>(n)), n));
    }
    return PermGroup(n, std::move(gens));
  }

  PermGroup dihedral(std::size_t n) {
    if (n < 3) {
      throw InvalidArgument("dihedral group needs n >= 3");
    }
    std::vector<Point> reflection(n);
    for (Point x = 0; x < n; ++x) {
      reflection[x] = static_cast<Point>((n - x) % n);
    }
    return PermGroup(n,
                     {cycle(range(0, static_cast<Point>(n)), n),
                      Permutation(std::move(reflection))});
  }

  ////////////////////////////////////////////////////////////////////////
  // Generator data files
  ////////////////////////////////////////////////////////////////////////

  GeneratorData parse_generator_data(std::string_view text) {
    GeneratorData            data;
    bool                     have_degree = false;
    std::vector<std::string> gen_lines;
    std::string              checksum;
    std::istringstream       in{std::string(text)};
    std::string              raw;
    std::size_t              lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      auto line = trim(raw);
      if (line.empty() || line[0] == '#') {
        continue;
      }
      if (line.rfind("degree", 0) == 0) {
        if (have_degree) {
          throw Error("line " + std::to_string(lineno) + ": repeated degree");
        }
        auto rest = trim(std::string_view(line).substr(6));
        if (rest.empty()
            || !std::all_of(rest.begin(), rest.end(), [](unsigned char c) {
                 return std::isdigit(c);
               })) {
          throw Error("line " + std::to_string(lineno) + ": bad degree");
        }
        data.degree = std::stoul(rest);
        have_degree = true;
        continue;
      }
      if (line.rfind("checksum", 0) == 0) {
        checksum = trim(std::string_view(line).substr(8));
        continue;
      }
      if (!have_degree) {
        throw Error("line " + std::to_string(lineno)
                    + ": generator before degree line");
      }
      try {
        data.generators.push_back(parse_cycles(line, data.degree));
      } catch (ParseError const& e) {
        throw Error("line " + std::to_string(lineno) + ": " + e.what());
      }
      gen_lines.push_back(line);
    }
    if (!have_degree) {
      throw Error("missing degree line");
    }
    if (!checksum.empty()) {
      std::string joined;
      for (std::size_t i = 0; i < gen_lines.size(); ++i) {
        joined += (i > 0 ? "\n" : "") + gen_lines[i];
      }
      std::ostringstream hex;
      hex << std::hex;
      hex.width(16);
      hex.fill('0');
      hex << fnv1a(joined);
      if (hex.str() != checksum) {
        throw Error("checksum mismatch: file says " + checksum
                    + ", generators hash to " + hex.str());
      }
    }
    return data;
  }

  GeneratorData read_generator_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_generator_data(buf.str());
  }

  std::string format_generator_data(GeneratorData const& data) {
    std::string out = "degree " + std::to_string(data.degree) + "\n";
    for (auto const& g : data.generators) {
      out += print_cycles(g) + "\n";
    }
    return out;
  }

  std::filesystem::path data_dir() {
    if (char const* env = std::getenv("CLOSURELAB_DATA_DIR");
        env != nullptr && *env != '\0') {
      return env;
    }
    return CLOSURELAB_DEFAULT_DATA_DIR;
  }

  ActionInstance mathieu(std::string_view name) {
    for (auto const& spec : mathieu_specs) {
      if (name != spec.name) {
        continue;
      }
      auto path = data_dir() / (std::string(spec.name) + ".txt");
      auto data = read_generator_file(path);
      if (data.degree != spec.degree) {
        throw Error(std::string(spec.name) + " validation failed: degree "
                    + std::to_string(data.degree) + " != "
                    + std::to_string(spec.degree));
      }
      PermGroup G(data.degree, std::move(data.generators));
      if (G.order() != spec.order) {
        throw Error(std::string(spec.name) + " validation failed: order "
                    + to_string(G.order())
                    + " != " + std::to_string(spec.order));
      }
      auto t = transitivity_degree(G);
      if (t != spec.transitivity) {
        throw Error(std::string(spec.name)
                    + " validation failed: transitivity degree "
                    + std::to_string(t)
                    + " != " + std::to_string(spec.transitivity));
      }
      return natural_action(spec.name, std::move(G));
    }
    throw InvalidArgument("unknown Mathieu group " + std::string(name));
  }

  ////////////////////////////////////////////////////////////////////////
  // PSL(n, q)
  ////////////////////////////////////////////////////////////////////////

  Integer psl_order(std::size_t n, std::uint32_t q) {
    Integer result = 1;
    for (std::size_t i = 0; i < n * (n - 1) / 2; ++i) {
      result *= q;
    }
    for (std::size_t i = 2; i <= n; ++i) {
      Integer qi = 1;
      for (std::size_t j = 0; j < i; ++j) {
        qi *= q;
      }
      result *= qi - 1;
    }
    return result / std::gcd(n, static_cast<std::size_t>(q - 1));
  }

  std::vector<std::uint32_t> psl_supported_fields() {
    return {2, 3, 4, 5, 7, 8, 9, 11, 13};
  }

  ActionInstance psl_projective(std::size_t n, std::uint32_t q) {
    auto fields = psl_supported_fields();
    if (std::find(fields.begin(), fields.end(), q) == fields.end()) {
      throw InvalidArgument("unsupported field size " + std::to_string(q));
    }
    if (n < 2) {
      throw InvalidArgument("PSL(n, q) needs n >= 2");
    }
    ProjectiveSpace P(n, q);
    auto const&     F = P.field();

    std::vector<Permutation> gens;
    auto transvection = identity_matrix(n);
    transvection[0][1] = 1;
    gens.push_back(matrix_action(P, transvection));

    if (q > 2) {
      auto diagonal  = identity_matrix(n);
      auto w         = F.primitive_element();
      diagonal[0][0] = w;
      diagonal[1][1] = F.inv(w);
      gens.push_back(matrix_action(P, diagonal));
    }

    // e_i -> e_{i+1}, e_n -> (-1)^(n-1) e_1 has determinant 1
    Matrix monomial(n, std::vector<FiniteField::Element>(n, 0));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      monomial[i][i + 1] = 1;
    }
    monomial[n - 1][0] = n % 2 == 0 ? F.neg(1) : 1;
    gens.push_back(matrix_action(P, monomial));

    std::string name
        = "PSL(" + std::to_string(n) + "," + std::to_string(q) + ")";
    PermGroup G(P.size(), std::move(gens));
    auto      expected = psl_order(n, q);
    if (G.order() != expected) {
      throw Error(name + " validation failed: order " + to_string(G.order())
                  + " != " + to_string(expected));
    }
    std::vector<std::string> labels;
    for (Point i = 0; i < P.size(); ++i) {
      labels.push_back(P.label(i));
    }
    return ActionInstance{name,
                          std::move(G),
                          Domain(std::move(labels)),
                          "projective(" + std::to_string(n) + ","
                              + std::to_string(q) + ")",
                          expected};
  }

  std::vector<Point> psl_frame_base(std::size_t n, std::uint32_t q) {
    ProjectiveSpace    P(n, q);
    std::vector<Point> out;
    for (std::size_t i = 0; i < n; ++i) {
      ProjectiveSpace::Vector e(n, 0);
      e[i] = 1;
      out.push_back(P.index_of(std::move(e)));
    }
    if (q > 2) {
      out.push_back(P.index_of(ProjectiveSpace::Vector(n, 1)));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Names
  ////////////////////////////////////////////////////////////////////////

  ActionInstance catalog_action(std::string_view name) {
    std::string s(name);
    std::smatch m;
    static std::regex const family(R"(([SACD])(\d+))");
    static std::regex const psl(R"(PSL\(?(\d+)[,_](\d+)\)?)");
    if (std::regex_match(s, m, family)) {
      auto n = std::stoul(m[2]);
      if (n < 1 || n > max_degree()) {
        throw InvalidArgument("degree out of range in " + s);
      }
      switch (m[1].str()[0]) {
        case 'S':
          return natural_action(s, symmetric(n));
        case 'A':
          return natural_action(s, alternating(n));
        case 'C':
          return natural_action(s, cyclic(n));
        default:
          return natural_action(s, dihedral(n));
      }
    }
    if (std::regex_match(s, m, psl)) {
      return psl_projective(std::stoul(m[1]),
                            static_cast<std::uint32_t>(std::stoul(m[2])));
    }
    if (s.size() == 3 && s[0] == 'M') {
      return mathieu(s);
    }
    throw InvalidArgument("unknown catalog group " + s);
  }

  std::vector<std::string> catalog_listing() {
    std::vector<std::string> out
        = {"Sn         symmetric group on n points",
           "An         alternating group on n points",
           "Cn         cyclic group, regular on n points",
           "Dn         dihedral group of order 2n on n points (n >= 3)"};
    for (auto const& spec : mathieu_specs) {
      out.push_back(std::string(spec.name) + "        Mathieu group, degree "
                    + std::to_string(spec.degree) + ", order "
                    + std::to_string(spec.order));
    }
    out.push_back(
        "PSL(n,q)   projective special linear group on projective points, "
        "q in {2,3,4,5,7,8,9,11,13}");
    return out;
  }

}  // namespace closurelab
