#pragma once

// Every numeric cell of the published packing and covering tables, with the
// parser that turns it into typed rows. `inf` encodes an infinite parameter.

#include <string>
#include <string_view>
#include <vector>

#include "hypack/density_cases.hpp"
#include "hypack/error.hpp"
#include "hypack/orthoscheme.hpp"

namespace hypack {

inline constexpr std::string_view kReferenceCsv = R"csv(
table_id,mode,u,v,w,special_note,r_or_R,vol_W,vol_B,density
1.i.a,packing,3,3,6,,0.34657,0.04229,0.17861,0.17598
1.i.a,packing,4,3,5,,0.53064,0.03589,0.66207,0.38437
1.i.a,packing,4,3,6,,0.65847,0.10572,1.30405,0.25697
1.i.a,packing,5,3,4,,0.80846,0.03589,2.52145,0.58554
1.i.a,packing,5,3,5,,0.99639,0.09333,5.04848,0.45080
1.i.a,packing,5,3,6,,1.08394,0.17150,6.73795,0.32740
1.i.a,packing,3,4,4,,0.65848,0.07633,1.30405,0.35592
1.i.a,packing,3,5,3,bold,0.86830,0.03905,3.18663,0.68003
1.i.a,covering,4,3,5,,1.22646,0.03589,10.41484,6.04641
1.i.a,covering,5,3,4,bold,1.22646,0.03589,10.41484,2.41856
1.i.a,covering,5,3,5,,1.90285,0.09333,58.62658,5.23495
1.i.a,covering,3,5,3,,1.38257,0.03905,16.16044,3.44864
1.s.i.a,packing,5,3,5,bold,0.95142,0.09333,4.31988,0.77147
1.s.i.a,packing,3,5,3,,0.69129,0.03905,1.52220,0.64967
1.s.i.a,covering,5,3,5,bold,1.12484,0.09333,7.66539,1.36893
1.s.i.a,covering,3,5,3,,0.89558,0.03905,3.53002,1.50661
1.i.b,packing,4,3,5,,0.38360,0.03589,0.24350,0.42409
1.i.b,packing,5,3,4,bold,0.45682,0.03589,0.41631,0.58007
1.i.b,packing,5,3,5,,0.58157,0.09333,0.88150,0.47227
1.i.b,packing,4,4,3,,0.48121,0.07633,0.48886,0.40029
1.i.b,packing,3,5,3,,0.34346,0.03905,0.17377,0.37082
1.i.b,covering,5,3,4,bold,0.84248,0.03589,2.88536,4.02028
1.s.i.b,packing,5,3,5,bold,0.45682,0.09333,0.41631,0.44609
1.s.i.b,covering,5,3,5,bold,0.99639,0.09333,5.04848,5.40954
1.s.i.c,packing,4,4,4,,0.56419,0.22899,0.80163,0.43759
1.s.i.c,packing,3,5,3,bold,0.38360,0.03905,0.24350,0.62355
1.s.i.c,packing,3,6,3,,0.61795,0.16916,1.06673,0.52551
1.s.i.c,covering,3,5,3,bold,0.69129,0.03905,1.52220,3.89804
1.ii.a,packing,3,3,inf,bold,0.65848,0.15266,1.30405,0.35592
1.ii.a,packing,3,4,6,bold,0.96242,0.19616,4.49014,0.47687
1.ii.a,packing,3,4,inf,,0.88137,0.25096,3.34793,0.27793
1.ii.a,packing,3,5,4,,1.30631,0.21299,13.09457,0.51233
1.ii.a,packing,3,5,5,bold,1.40036,0.26320,16.95557,0.53684
1.ii.a,packing,3,5,inf,,1.25850,0.33233,11.43025,0.28662
1.ii.a,packing,4,3,inf,bold,0.88137,0.25096,3.34793,0.27793
1.ii.a,packing,5,3,inf,bold,1.25850,0.33233,11.43025,0.28662
1.ii.a,covering,3,3,8,bold,1.30889,0.10721,13.18949,5.12591
1.ii.a,covering,3,4,5,bold,1.53591,0.16596,24.17649,3.03486
1.ii.a,covering,3,5,4,bold,1.93116,0.21299,62.56492,2.44790
1.ii.a,covering,3,5,5,,2.08287,0.26320,88.11084,2.78974
1.ii.a,covering,4,3,8,bold,1.81579,0.18790,47.88239,5.30903
1.ii.a,covering,5,3,8,bold,2.37474,0.26094,166.52911,5.31816
1.ii.b,packing,3,4,6,,0.60745,0.19616,1.01065,0.42934
1.ii.b,packing,3,4,7,bold,0.64583,0.21218,1.22631,0.48164
1.ii.b,packing,3,3,inf,bold,0.54931,0.15266,0.73740,0.40253
1.ii.b,packing,3,5,5,bold,0.67390,0.26320,1.40355,0.44439
1.ii.b,packing,3,5,inf,,0.54931,0.33233,0.73740,0.18491
1.ii.b,packing,4,3,inf,bold,0.65848,0.25096,1.30405,0.32477
1.ii.b,packing,5,3,inf,bold,0.77173,0.33233,2.16804,0.32619
1.ii.b,packing,3,6,5,bold,0.72182,0.35992,1.74787,0.40469
1.ii.b,packing,3,6,inf,,0.54931,0.42289,0.73740,0.14531
1.ii.b,packing,6,3,inf,bold,0.88137,0.42289,3.34793,0.32987
1.ii.b,packing,4,4,inf,bold,0.88137,0.45798,3.34793,0.45689
1.ii.b,covering,3,3,8,bold,1.16245,0.10721,8.60501,6.68843
1.ii.b,covering,3,4,5,bold,1.14791,0.16596,8.23135,4.13311
1.ii.b,covering,3,5,4,bold,1.30632,0.21299,13.09457,5.12335
1.ii.b,covering,4,3,9,bold,1.55832,0.20295,25.59284,7.88150
1.ii.b,covering,5,3,9,bold,1.80489,0.27783,46.67018,8.39914
2.i.b,packing,7,3,3,bold,0.70133,0.08856,1.59395,0.64279
2.i.b,packing,7,3,4,bold,0.81624,0.16297,2.60141,0.57008
2.i.b,packing,7,3,5,bold,0.87514,0.23326,3.27033,0.50072
2.i.b,packing,5,4,3,bold,0.69129,0.16596,1.52220,0.45859
2.i.b,packing,4,5,3,bold,0.69129,0.21299,1.52220,0.44668
2.i.b,packing,7,3,6,bold,0.90817,0.31781,3.69768,0.41553
2.i.b,packing,5,4,4,bold,0.86233,0.34084,3.11499,0.45696
2.i.b,packing,4,6,3,bold,0.65848,0.31717,1.30405,0.25697
2.i.b,covering,8,3,3,bold,1.12838,0.10721,7.75022,2.25901
2.i.b,covering,7,3,4,bold,1.36005,0.16297,15.19874,3.33068
2.i.b,covering,7,3,5,bold,1.88213,0.23326,55.88945,8.55728
2.i.b,covering,5,4,3,bold,1.28550,0.16596,12.34723,3.71986
2.i.b,covering,4,5,3,bold,1.61692,0.21299,29.64079,8.69789
2.ii.b,packing,7,3,7,bold,0.92836,0.38325,3.97899,0.37080
2.ii.b,packing,7,3,8,bold,0.94156,0.41326,4.17152,0.36051
2.ii.b,packing,7,3,inf,,0.98513,0.49195,4.85782,0.35267
2.ii.b,packing,5,4,5,bold,0.91604,0.46190,3.80539,0.41193
2.ii.b,packing,5,4,inf,bold,1.01789,0.59404,5.42887,0.45694
2.ii.b,covering,7,3,7,bold,2.28239,0.38325,136.50395,12.72062
2.ii.b,covering,7,3,8,,2.16470,0.41326,105.59967,9.12600
2.ii.b,covering,7,3,9,bold,2.16413,0.43171,105.46662,8.72492
2.ii.b,covering,5,4,5,bold,1.83500,0.46190,50.08711,5.42186
2.ii.b,covering,5,4,6,bold,1.79568,0.50747,45.66776,4.49957
2.s.ii.b,packing,3,inf,3,bold,0.39768,0.44446,0.27191,0.10196
2.s.ii.b,packing,4,inf,4,bold,0.65848,0.63434,1.30405,0.25697
2.s.ii.b,packing,5,5,5,bold,0.74746,0.57271,1.95548,0.34144
2.s.ii.b,packing,5,inf,5,printed as (5;v->inf;3;5),0.55832,0.73015,0.77585,0.10626
2.s.ii.b,packing,6,4,6,bold,0.78340,0.55557,2.27605,0.34140
2.s.ii.b,packing,6,inf,6,,0.48121,0.78465,0.48890,0.05192
2.s.ii.b,covering,3,8,3,bold,1.49263,0.32610,21.63099,11.05541
2.s.ii.b,covering,4,5,4,bold,1.43911,0.43062,18.80212,5.45785
2.s.ii.b,covering,5,4,5,bold,1.40493,0.46190,17.16523,3.71622
2.s.ii.b,covering,6,4,6,bold,1.47083,0.55557,20.43783,3.06559
2.s.ii.c,packing,3,7,3,bold,0.78871,0.27899,2.32647,0.59564
2.s.ii.c,packing,3,8,3,,0.72041,0.32610,1.73696,0.33290
2.s.ii.c,packing,4,5,4,,0.80846,0.43062,2.52145,0.58554
2.s.ii.c,packing,5,4,5,,0.72146,0.46190,1.74508,0.47226
2.s.ii.c,packing,6,4,6,,0.69217,0.55557,1.52838,0.34388
2.s.ii.c,covering,3,8,3,bold,1.26607,0.32610,11.68147,2.23886
2.s.ii.c,covering,4,5,4,,1.22646,0.43062,10.41484,2.41856
2.s.ii.c,covering,5,4,5,,1.28483,0.46190,12.32350,3.33500
2.s.ii.c,covering,5,5,5,,1.51882,0.57271,23.14218,4.04082
2.s.ii.c,covering,6,4,6,,1.43252,0.55557,18.47661,4.15712
2.s.ii.e,packing,3,inf,3,,0.54931,0.44446,0.73740,0.27652
2.s.ii.e,packing,4,8,4,bold,0.76429,0.56369,2.10109,0.46592
2.s.ii.e,packing,4,9,4,,0.73883,0.57923,1.88365,0.40650
2.s.ii.e,packing,4,inf,4,,0.65848,0.63434,1.30405,0.25697
2.s.ii.e,packing,5,5,5,,0.77537,0.57271,2.20130,0.38436
2.s.ii.e,packing,5,inf,5,,0.55832,0.73015,0.77585,0.10626
2.s.ii.e,packing,6,4,6,,0.78340,0.55557,2.27605,0.34140
2.s.ii.e,covering,3,8,3,,1.17362,0.32610,8.90096,4.54920
2.s.ii.e,covering,3,9,3,,1.23555,0.35444,10.69512,5.02911
2.s.ii.e,covering,4,5,4,,1.22646,0.43062,10.41484,3.02321
2.s.ii.e,covering,4,8,4,,1.33092,0.56369,14.02565,3.11023
2.s.ii.e,covering,5,4,5,,1.28483,0.46190,12.32350,2.66800
2.s.ii.e,covering,5,5,5,,1.42880,0.57271,18.29491,3.19444
2.s.ii.e,covering,6,4,6,bold,1.40674,0.55557,17.24885,2.58725
2.s.ii.e,covering,6,5,6,,1.63628,0.64650,31.09468,4.00806
2.s.ii.e,covering,6,6,6,,1.83634,0.69130,50.24429,6.05670
)csv";

struct TableRow {
  std::string table_id;
  Mode mode = Mode::Packing;
  OrthoParams params;
  std::string special_note;  ///< "bold" for printed extremal cells, otherwise a remark or empty
  double radius = 0.0;       ///< r or R
  double vol_w = 0.0;
  double vol_ball = 0.0;
  double density = 0.0;

  bool bold() const { return special_note == "bold"; }
};

namespace detail {

inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline double parse_cell(const std::string& s, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double x = std::stod(s, &used);
    if (used == s.size()) return x;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::BadInput, "reference table line " + std::to_string(line_no) + ": bad number '" + s + "'");
}

}  // namespace detail

/// Parses the table_id,mode,u,v,w,special_note,r_or_R,vol_W,vol_B,density format.
inline std::vector<TableRow> parse_reference_csv(std::string_view text) {
  std::vector<TableRow> rows;
  std::size_t pos = 0, line_no = 0;
  bool header_seen = false;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      header_seen = true;
      if (line.starts_with("table_id,")) continue;
    }
    const auto cells = detail::split_csv_line(line);
    if (cells.size() != 10)
      throw Error(ErrorCode::BadInput, "reference table line " + std::to_string(line_no) + ": expected 10 columns");
    TableRow r;
    r.table_id = cells[0];
    r.mode = parse_mode(cells[1]);
    r.params = OrthoParams::of(parse_order(cells[2]), parse_order(cells[3]), parse_order(cells[4]));
    r.special_note = cells[5];
    r.radius = detail::parse_cell(cells[6], line_no);
    r.vol_w = detail::parse_cell(cells[7], line_no);
    r.vol_ball = detail::parse_cell(cells[8], line_no);
    r.density = detail::parse_cell(cells[9], line_no);
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw Error(ErrorCode::DatasetMissing, "reference table is empty");
  return rows;
}

inline const std::vector<TableRow>& reference_rows() {
  static const std::vector<TableRow> rows = parse_reference_csv(kReferenceCsv);
  return rows;
}

}  // namespace hypack
