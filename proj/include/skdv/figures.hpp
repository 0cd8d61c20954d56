#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace skdv {

// One CSV table; an empty optional is written as an empty field.
struct FigureTable {
  std::string name;  // file name, e.g. "fig2_t-10.csv"
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<double>>> rows;
};

// which in {1, 2, 3, 4}; throws ConfigError otherwise.
//   1: fig1.csv            y,u,re_rho0,im_rho0 over y in [-10,10]
//   2: fig2_t{-10,0,10}    x,im_u for the rational solution, poles blank
//   3: fig3_t{-10,0,10}    x,abs_u, two-soliton (k1 = 2 k2 = 1)
//   4: fig4_t{-15,0,15}    x,abs_u, three-soliton (1, 7/10, 2/5)
std::vector<FigureTable> figure_tables(int which);

// Shortest round-trip decimal.
std::string format_number(double v);
std::string to_csv(const FigureTable& table);
// Writes each table into `dir` (created if missing); returns the paths.
std::vector<std::filesystem::path> write_figure(int which, const std::filesystem::path& dir);

inline constexpr int kFigurePoints = 801;

}  // namespace skdv
