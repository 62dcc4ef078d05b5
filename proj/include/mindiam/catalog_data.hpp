#pragma once

// Reference graph for each (n, k) cell as originally published: the printed
// edge list, the edges read off the printed adjacency matrix, the graph6
// string, and the number of optimal graphs claimed for the cell.

#include <array>
#include <cstdint>
#include <string_view>

namespace mindiam::detail {

struct RawCatalogEntry {
  int n;
  int k;
  int d;
  std::string_view name;
  std::string_view graph6;
  std::string_view printed_edges;
  std::string_view matrix_edges;
  std::uint64_t claimed_count;
  bool claim_is_lower_bound;
};

// clang-format off
inline constexpr std::array<RawCatalogEntry, 26> raw_catalog{{
    {5, 3, 2, "", "D}k",
     "1-2\n1-3\n1-4\n1-5\n2-3\n2-4\n3-5\n4-5\n",
     "1-2\n1-3\n1-4\n1-5\n2-3\n2-4\n3-5\n4-5\n",
     2, true},
    {6, 3, 2, "3-prism graph", "E{Sw",
     "1-2\n1-3\n1-4\n2-3\n2-5\n3-6\n4-5\n4-6\n5-6\n",
     "1-2\n1-3\n1-4\n2-3\n2-5\n3-6\n4-5\n4-6\n5-6\n",
     2, false},
    {7, 3, 2, "", "FsdrO",
     "1-2\n1-3\n1-4\n1-7\n2-5\n2-6\n3-5\n3-6\n4-5\n4-7\n6-7\n",
     "1-2\n1-3\n1-4\n1-7\n2-5\n2-6\n3-5\n3-6\n4-5\n4-7\n6-7\n",
     2, true},
    {8, 3, 2, "Wagner graph", "GhdHKc",
     "1-2\n1-5\n1-8\n2-3\n2-6\n3-4\n3-7\n4-5\n4-8\n5-6\n6-7\n7-8\n",
     "1-2\n1-5\n1-8\n2-3\n2-6\n3-4\n3-7\n4-5\n4-8\n5-6\n6-7\n7-8\n",
     2, false},
    {9, 3, 2, "", "HsT@PWU",
     "1-2\n1-4\n1-5\n2-3\n2-6\n3-4\n3-7\n3-8\n4-9\n5-7\n5-8\n6-8\n6-9\n7-9\n",
     "1-2\n1-4\n1-5\n2-3\n2-6\n3-4\n3-7\n3-8\n4-9\n5-7\n5-8\n6-8\n6-9\n7-9\n",
     1, true},
    {10, 3, 2, "Petersen graph", "IUYAHCPBG",
     "1-3\n1-4\n1-6\n2-4\n2-5\n2-7\n3-5\n3-8\n4-9\n5-10\n6-7\n6-10\n7-8\n8-9\n9-10\n",
     "1-3\n1-4\n1-6\n2-4\n2-5\n2-7\n3-5\n3-8\n4-9\n5-10\n6-7\n6-10\n7-8\n8-9\n9-10\n",
     1, false},
    {11, 3, 3, "", "J{COXCPAIG_",
     "1-2\n1-3\n1-4\n2-3\n2-10\n3-7\n4-5\n4-8\n4-11\n5-6\n5-9\n6-7\n6-11\n7-8\n8-9\n9-10\n10-11\n",
     "1-2\n1-3\n1-4\n2-3\n2-10\n3-7\n4-5\n4-8\n4-11\n5-6\n5-9\n6-7\n6-11\n7-8\n8-9\n9-10\n10-11\n",
     34, true},
    {12, 3, 3, "Tietze graph", "KhDGHEH_?__R",
     "1-2\n1-9\n1-10\n2-3\n2-6\n3-4\n3-8\n4-5\n4-11\n5-6\n5-9\n6-7\n7-8\n7-12\n8-9\n10-11\n10-12\n11-12\n",
     "1-2\n1-9\n1-10\n2-3\n2-6\n3-4\n3-8\n4-5\n4-11\n5-6\n5-9\n6-7\n7-8\n7-12\n8-9\n10-11\n10-12\n11-12\n",
     34, false},
    {13, 3, 3, "", "LhcIGCP_GGc@_P",
     "1-2\n1-5\n1-10\n1-13\n2-3\n2-7\n3-4\n3-12\n4-5\n4-9\n5-6\n6-7\n6-11\n7-8\n8-9\n8-13\n9-10\n10-11\n11-12\n12-13\n",
     "1-2\n1-5\n1-10\n1-13\n2-3\n2-7\n3-4\n3-12\n4-5\n4-9\n5-6\n6-7\n6-11\n7-8\n8-9\n8-13\n9-10\n10-11\n11-12\n12-13\n",
     34, true},
    {14, 3, 3, "Heawood graph", "MhEGHC@AI?_PC@_G_",
     "1-2\n1-6\n1-14\n2-3\n2-11\n3-4\n3-8\n4-5\n4-13\n5-6\n5-10\n6-7\n7-8\n7-12\n8-9\n9-10\n9-14\n10-11\n11-12\n12-13\n13-14\n",
     "1-2\n1-6\n1-14\n2-3\n2-11\n3-4\n3-8\n4-5\n4-13\n5-6\n5-10\n6-7\n7-8\n7-12\n8-9\n9-10\n9-14\n10-11\n11-12\n12-13\n13-14\n",
     34, false},
    {15, 3, 3, "", "N{O___GA?G?k?i?d?J?",
     "1-2\n1-3\n1-4\n2-3\n2-5\n3-6\n4-7\n4-8\n5-9\n5-10\n6-11\n6-12\n7-13\n7-14\n8-12\n8-15\n9-12\n9-13\n10-14\n10-15\n11-13\n11-15\n12-14\n",
     "1-2\n1-3\n1-4\n2-3\n2-5\n3-6\n4-7\n4-8\n5-9\n5-10\n6-11\n6-12\n7-13\n7-14\n8-12\n8-15\n9-12\n9-13\n10-14\n10-15\n11-13\n11-15\n12-14\n",
     14, true},
    {16, 3, 3, "", "O{O___GA?G?_?i?d?K_Ao",
     "1-2\n1-3\n1-4\n2-3\n2-5\n3-6\n4-7\n4-8\n5-9\n5-10\n6-11\n6-12\n7-13\n7-14\n8-15\n8-16\n9-13\n9-15\n10-14\n10-16\n11-13\n11-16\n12-14\n12-15\n",
     "1-2\n1-3\n1-4\n2-3\n2-5\n3-6\n4-7\n4-8\n5-9\n5-10\n6-11\n6-12\n7-13\n7-14\n8-15\n8-16\n9-13\n9-15\n10-14\n10-16\n11-13\n11-16\n12-14\n12-15\n",
     14, false},
    {17, 3, 3, "", "PhCGKCH?K?_PG@?Cg?GG@c?C",
     "1-2\n1-8\n1-11\n1-17\n2-3\n2-15\n3-4\n3-13\n4-5\n4-17\n5-6\n5-9\n6-7\n6-16\n7-8\n7-12\n8-9\n9-10\n10-11\n10-14\n11-12\n12-13\n13-14\n14-15\n15-16\n16-17\n",
     "1-2\n1-8\n1-11\n1-17\n2-3\n2-15\n3-4\n3-13\n4-5\n4-17\n5-6\n5-9\n6-7\n6-16\n7-8\n7-12\n8-9\n9-10\n10-11\n10-14\n11-12\n12-13\n13-14\n14-15\n15-16\n16-17\n",
     1, true},
    {18, 3, 3, "(3,3)-graph on 18 vertices", "QhCGKCH?G?_PG@?Cg?GG@C?E?GG",
     "1-2\n1-8\n1-18\n2-3\n2-15\n3-4\n3-13\n4-5\n4-17\n5-6\n5-9\n6-7\n6-16\n7-8\n7-12\n8-9\n9-10\n10-11\n10-14\n11-12\n11-18\n12-13\n13-14\n14-15\n15-16\n16-17\n17-18\n",
     "1-2\n1-8\n1-18\n2-3\n2-15\n3-4\n3-13\n4-5\n4-17\n5-6\n5-9\n6-7\n6-16\n7-8\n7-12\n8-9\n9-10\n10-11\n10-14\n11-12\n11-18\n12-13\n13-14\n14-15\n15-16\n16-17\n17-18\n",
     1, false},
    {19, 3, 3, "", "RhECQ?_@G?`@@?C?_G_AO?_S?_G?DG",
     "1-2\n1-6\n1-7\n2-3\n2-8\n3-4\n3-9\n4-5\n4-14\n5-7\n5-12\n6-10\n6-13\n7-17\n8-15\n8-16\n9-10\n9-18\n10-11\n11-12\n11-16\n12-15\n13-14\n13-19\n14-17\n15-19\n16-17\n17-18\n18-19\n",
     "1-2\n1-6\n1-7\n2-3\n2-8\n3-4\n3-9\n4-5\n4-14\n5-7\n5-12\n6-10\n6-13\n7-17\n8-15\n8-16\n9-10\n9-18\n10-11\n11-12\n11-16\n12-15\n13-14\n13-19\n14-17\n15-19\n16-17\n17-18\n18-19\n",
     1, true},
    {20, 3, 3, "(3,3)-graph on 20 vertices (C5xF4)", "ShECQ?_@G?`@@?C?_G_AO?_??@W@?O?DC",
     "1-2\n1-6\n1-7\n2-3\n2-8\n3-4\n3-9\n4-5\n4-14\n5-7\n5-12\n6-10\n6-13\n7-17\n8-15\n8-16\n9-10\n9-19\n10-11\n11-12\n11-16\n12-15\n13-14\n13-20\n14-18\n15-20\n16-18\n17-18\n17-19\n19-20\n",
     "1-2\n1-6\n1-7\n2-3\n2-8\n3-4\n3-9\n4-5\n4-14\n5-7\n5-12\n6-10\n6-13\n7-17\n8-15\n8-16\n9-10\n9-19\n10-11\n11-12\n11-16\n12-15\n13-14\n13-20\n14-18\n15-20\n16-18\n17-18\n17-19\n19-20\n",
     1, false},
    {11, 4, 2, "4-Andrásfai graph", "JlSggUDOlA_",
     "1-2\n1-4\n1-9\n1-11\n2-3\n2-5\n2-10\n3-4\n3-16\n3-11\n4-5\n4-7\n5-6\n5-8\n6-7\n6-9\n7-8\n7-10\n8-9\n8-11\n9-10\n10-11\n",
     "1-2\n1-4\n1-9\n1-11\n2-3\n2-5\n2-10\n3-4\n3-6\n3-11\n4-5\n4-7\n5-6\n5-8\n6-7\n6-9\n7-8\n7-10\n8-9\n8-11\n9-10\n10-11\n",
     37, false},
    {12, 4, 2, "Chvátal graph", "KG@LIchdMoV?",
     "1-7\n1-10\n1-11\n1-12\n2-3\n2-6\n2-8\n2-11\n3-7\n3-9\n3-12\n4-8\n4-10\n4-11\n4-12\n5-6\n5-9\n5-11\n5-12\n6-7\n6-10\n7-8\n8-9\n9-10\n",
     "1-7\n1-10\n1-11\n1-12\n2-3\n2-6\n2-8\n2-11\n3-7\n3-9\n3-12\n4-8\n4-10\n4-11\n4-12\n5-6\n5-9\n5-11\n5-12\n6-7\n6-10\n7-8\n8-9\n9-10\n",
     26, false},
    {13, 4, 2, "13-cyclotomic graph", "LhEIHEPQHGaPaP",
     "1-2\n1-6\n1-9\n1-13\n2-3\n2-7\n2-10\n3-4\n3-8\n3-11\n4-5\n4-9\n4-12\n5-6\n5-10\n5-13\n6-7\n6-11\n7-8\n7-12\n8-9\n8-13\n9-10\n10-11\n11-12\n12-13\n",
     "1-2\n1-6\n1-9\n1-13\n2-3\n2-7\n2-10\n3-4\n3-8\n3-11\n4-5\n4-9\n4-12\n5-6\n5-10\n5-13\n6-7\n6-11\n7-8\n7-12\n8-9\n8-13\n9-10\n10-11\n11-12\n12-13\n",
     10, false},
    {14, 4, 2, "", "Mo?CB`gXCw@wDgEc?",
     "1-2\n1-3\n1-7\n1-11\n2-8\n2-9\n2-10\n3-8\n3-9\n3-10\n4-8\n4-11\n4-13\n4-14\n5-9\n5-11\n5-12\n5-14\n6-10\n6-11\n6-12\n6-13\n7-12\n7-13\n7-14\n8-12\n9-13\n10-14\n",
     "1-2\n1-3\n1-7\n1-11\n2-8\n2-9\n2-10\n3-8\n3-9\n3-10\n4-8\n4-11\n4-13\n4-14\n5-9\n5-11\n5-12\n5-14\n6-10\n6-11\n6-12\n6-13\n7-12\n7-13\n7-14\n8-12\n9-13\n10-14\n",
     1, false},
    {15, 4, 2, "", "N?ACE`cL?wTGEgQcKP?",
     "1-6\n1-7\n1-8\n1-12\n2-8\n2-9\n2-14\n2-15\n3-9\n3-10\n3-12\n3-15\n4-8\n4-10\n4-11\n4-13\n5-11\n5-12\n5-13\n5-14\n6-9\n6-10\n6-11\n7-13\n7-14\n7-15\n8-12\n9-13\n10-14\n11-15\n",
     "1-6\n1-7\n1-8\n1-12\n2-8\n2-9\n2-14\n2-15\n3-9\n3-10\n3-12\n3-15\n4-8\n4-10\n4-11\n4-13\n5-11\n5-12\n5-13\n5-14\n6-9\n6-10\n6-11\n7-13\n7-14\n7-15\n8-12\n9-13\n10-14\n11-15\n",
     1, false},
    {16, 5, 2, "Clebsch graph", "OPtcIcSoGT@__XWAcJ_ci",
     "1-3\n1-5\n1-7\n1-10\n1-13\n2-5\n2-6\n2-8\n2-10\n2-14\n3-4\n3-6\n3-14\n3-15\n4-5\n4-8\n4-9\n4-16\n5-11\n5-12\n6-7\n6-9\n6-12\n7-8\n7-11\n7-16\n8-13\n8-15\n9-10\n9-11\n9-13\n10-15\n10-16\n11-14\n11-15\n12-13\n12-15\n12-16\n13-14\n14-16\n",
     "1-3\n1-5\n1-7\n1-10\n1-13\n2-5\n2-6\n2-8\n2-10\n2-14\n3-4\n3-6\n3-14\n3-15\n4-5\n4-8\n4-9\n4-16\n5-11\n5-12\n6-7\n6-9\n6-12\n7-8\n7-11\n7-16\n8-13\n8-15\n9-10\n9-11\n9-13\n10-15\n10-16\n11-14\n11-15\n12-13\n12-15\n12-16\n13-14\n14-16\n",
     3, true},
    {17, 5, 2, "", "PxCYHEBCIO_bGPagiAOQP`@K",
     "1-2\n1-3\n1-9\n1-14\n1-17\n2-3\n2-7\n2-11\n2-15\n3-4\n3-8\n3-13\n4-5\n4-6\n4-10\n4-15\n5-6\n5-11\n5-14\n5-16\n6-7\n6-12\n6-17\n7-8\n7-9\n7-14\n8-9\n8-13\n8-16\n9-10\n9-14\n10-11\n10-12\n10-15\n11-12\n11-16\n12-13\n12-17\n13-14\n13-15\n15-16\n15-17\n16-17\n",
     "1-2\n1-3\n1-9\n1-14\n1-17\n2-3\n2-7\n2-11\n2-15\n3-4\n3-8\n3-13\n4-5\n4-6\n4-10\n4-15\n5-6\n5-11\n5-14\n5-16\n6-7\n6-12\n6-17\n7-8\n7-9\n7-14\n8-9\n8-13\n8-16\n9-10\n9-14\n10-11\n10-12\n10-15\n11-12\n11-16\n12-13\n12-17\n13-14\n13-15\n15-16\n15-17\n16-17\n",
     1, true},
    {18, 5, 2, "(18,1)-noncayley transitive graph", "Q{eAaSqIWI?o@D@IG?X?WCAkGDo",
     "1-2\n1-3\n1-4\n1-5\n1-6\n2-3\n2-7\n2-8\n2-15\n3-9\n3-10\n3-16\n4-5\n4-7\n4-9\n4-17\n5-8\n5-10\n5-18\n6-11\n6-12\n6-13\n6-14\n7-8\n7-9\n7-12\n8-10\n8-11\n9-10\n9-14\n10-13\n11-14\n11-16\n11-17\n12-13\n12-16\n12-18\n13-15\n13-17\n14-15\n14-18\n15-17\n15-18\n16-17\n16-18\n",
     "1-2\n1-3\n1-4\n1-5\n1-6\n2-3\n2-7\n2-8\n2-15\n3-9\n3-10\n3-16\n4-5\n4-7\n4-9\n4-17\n5-8\n5-10\n5-18\n6-11\n6-12\n6-13\n6-14\n7-8\n7-9\n7-12\n8-10\n8-11\n9-10\n9-14\n10-13\n11-14\n11-16\n11-17\n12-13\n12-16\n12-18\n13-15\n13-17\n14-15\n14-18\n15-17\n15-18\n16-17\n16-18\n",
     1, true},
    {19, 5, 2, "", "RzAKQQPD@AbOI?O_?Z?IK@BO?rO@FO",
     "1-2\n1-3\n1-6\n1-7\n1-9\n2-3\n2-4\n2-8\n2-14\n3-4\n3-11\n3-13\n4-9\n4-10\n4-12\n5-6\n5-7\n5-8\n5-12\n5-13\n6-10\n6-16\n6-17\n7-12\n7-14\n7-15\n8-9\n8-15\n8-16\n8-11\n9-18\n9-19\n10-11\n10-15\n10-18\n11-15\n11-17\n12-16\n12-17\n13-16\n13-18\n13-19\n14-17\n14-18\n14-19\n15-19\n16-18\n17-19\n",
     "1-2\n1-3\n1-6\n1-7\n1-9\n2-3\n2-4\n2-8\n2-14\n3-4\n3-11\n3-13\n4-9\n4-10\n4-12\n5-6\n5-7\n5-8\n5-12\n5-13\n6-10\n6-16\n6-17\n7-12\n7-14\n7-15\n8-9\n8-11\n8-15\n8-16\n9-18\n9-19\n10-11\n10-15\n10-18\n11-15\n11-17\n12-16\n12-17\n13-16\n13-18\n13-19\n14-17\n14-18\n14-19\n15-19\n16-18\n17-19\n",
     1, true},
    {20, 5, 2, "(20,8)-noncayley transitive graph", "Ssa@Gt`PQcHOGCGC?cOHAC@cOD_OSgORO",
     "1-2\n1-3\n1-4\n1-5\n1-6\n2-9\n2-10\n2-11\n2-12\n3-7\n3-9\n3-13\n3-14\n4-8\n4-11\n4-17\n4-18\n5-8\n5-12\n5-19\n5-20\n6-7\n6-10\n6-15\n6-16\n7-8\n7-11\n7-12\n8-9\n8-10\n9-15\n9-16\n10-13\n10-14\n11-19\n11-20\n12-17\n12-18\n13-15\n13-17\n13-19\n14-16\n14-18\n14-20\n15-18\n15-20\n16-17\n16-19\n17-20\n18-19\n",
     "1-2\n1-3\n1-4\n1-5\n1-6\n2-9\n2-10\n2-11\n2-12\n3-7\n3-9\n3-13\n3-14\n4-8\n4-11\n4-17\n4-18\n5-8\n5-12\n5-19\n5-20\n6-7\n6-10\n6-15\n6-16\n7-8\n7-11\n7-12\n8-9\n8-10\n9-15\n9-16\n10-13\n10-14\n11-19\n11-20\n12-17\n12-18\n13-15\n13-17\n13-19\n14-16\n14-18\n14-20\n15-18\n15-20\n16-17\n16-19\n17-20\n18-19\n",
     1, true},
}};
// clang-format on

}  // namespace mindiam::detail
