#include "qmc/regression.hpp"

namespace qmc::cli {

const std::vector<RegressionEntry>& regression_table() {
  static const std::vector<RegressionEntry> table{
      {"all", 2, {}, 0, {"1", "2", "16", "512", "65536"}, "q^(n^2)"},
      {"invertible", 2, {}, 0, {"1", "1", "6", "168", "20160", "9999360"}, "order of GL_n(2)"},
      {"subspaces_total", 2, {}, 0, {"1", "2", "5", "16", "67", "374", "2825", "29212", "417199"},
       "Galois numbers"},
      {"qbell", 2, {}, 1, {"1", "4", "57", "2921", "540145", "364558049"}, "direct-sum splittings"},
      {"qfactorial", 2, {}, 0,
       {"1", "1", "3", "21", "315", "9765", "615195", "78129765", "19923090075"}, "complete flags"},
      {"lin_derangement", 2, {}, 0, {"1", "0", "2", "48", "5824", "2887680"}, "linear derangements"},
      {"proj_derangement", 3, {}, 1, {"0", "18", "3456", "7619508", "149200289280"},
       "projective derangements"},
      {"diagonalizable", 2, {}, 1,
       {"2", "8", "58", "802", "20834", "1051586", "102233986", "196144424834"},
       "diagonalizable over F_2",
       {{8, "19614424834"}}},
      {"projection", 2, {}, 1,
       {"2", "8", "58", "802", "20834", "1051586", "102233986", "196144424834"},
       "idempotents over F_2",
       {{8, "19614424834"}}},
      {"diagonalizable", 3, {}, 1, {"3", "39", "2109", "417153", "346720179"},
       "diagonalizable over F_3"},
      {"projection", 3, {}, 0,
       {"1", "2", "14", "236", "12692", "1783784", "811523288", "995733306992"},
       "idempotents over F_3"},
      {"power_identity", 3, 2, 0,
       {"1", "2", "14", "236", "12692", "1783784", "811523288", "995733306992"},
       "involutions over F_3"},
      {"power_identity", 2, 2, 1,
       {"1", "4", "22", "316", "6976", "373024", "32252032", "6619979776"}, "involutions over F_2"},
      {"power_identity", 4, 2, 1,
       {"1", "16", "316", "69616", "21999616", "74351051776", "374910580965376"},
       "involutions over F_4"},
      {"power_identity", 2, 3, 1,
       {"1", "3", "57", "1233", "75393", "19109889", "6326835201", "6388287561729"},
       "A^3 = I over F_2"},
      {"power_identity", 4, 3, 1, {"3", "63", "8739", "5790339", "25502129667"}, "A^3 = I over F_4"},
      {"power_identity", 3, 8, 1, {"2", "32", "4448", "3816128", "26288771456"}, "A^8 = I over F_3"},
      {"nilpotent", 2, {}, 0, {"1", "1", "4", "64", "4096", "1048576", "1073741824"},
       "nilpotent matrices"},
      {"cyclic", 2, {}, 1,
       {"2", "14", "412", "50832", "25517184", "51759986688", "422000664182784"}, "cyclic matrices"},
      {"semisimple", 2, {}, 1,
       {"2", "10", "218", "25426", "11979362", "24071588290", "195647202043778"},
       "semi-simple matrices"},
      {"separable", 2, {}, 1,
       {"2", "8", "160", "22272", "9744384", "20309999616", "165823024988160"},
       "separable matrices"},
      {"conjclasses_all", 2, {}, 1, {"2", "6", "14", "34", "74", "166", "350", "746", "1546", "3206"},
       "similarity classes of M_n(2)"},
      {"conjclasses_all", 3, {}, 1,
       {"3", "12", "39", "129", "399", "1245", "3783", "11514", "34734", "104754"},
       "similarity classes of M_n(3)"},
      {"conjclasses_gl", 2, {}, 1, {"1", "3", "6", "14", "27", "60", "117", "246", "490", "1002"},
       "conjugacy classes of GL_n(2)"},
      {"conjclasses_gl", 3, {}, 1,
       {"2", "8", "24", "78", "232", "720", "2152", "6528", "19578", "58944"},
       "conjugacy classes of GL_n(3)"},
      {"max_class", 2, {}, 1, {"1", "3", "56", "3360", "833280", "959938560"},
       "largest class in GL_n(2)"},
      {"min_centralizer", 2, {}, 1, {"1", "2", "3", "6", "12", "21", "42", "84", "147", "294"},
       "smallest centralizer in GL_n(2)"},
      {"qbinom_row", 2, {}, 0,
       {"1", "1", "1", "1", "3", "1", "1", "7", "7", "1", "1", "15", "35", "15", "1",
        "1", "31", "155", "155", "31", "1", "1", "63", "651", "1395", "651", "63", "1"},
       "Gaussian binomials"},
      {"qstirling_row", 2, {}, 1,
       {"1", "1", "3", "1", "28", "28", "1", "400", "1680", "840",
        "1", "10416", "168640", "277760", "83328",
        "1", "525792", "36053248", "159989760", "139991040", "27998208"},
       "q-Stirling numbers"},
      {"rank_row", 2, {}, 0,
       {"1", "1", "1", "1", "9", "6", "1", "49", "294", "168", "1", "225", "7350", "37800", "20160",
        "1", "961", "144150", "4036200", "19373760", "9999360"},
       "matrices by rank"},
  };
  return table;
}

}  // namespace qmc::cli
