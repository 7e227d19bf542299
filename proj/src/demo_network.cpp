#include "grnet/demo_network.hpp"

#include "grnet/netinfer.hpp"

namespace grnet {

namespace {

// source target sign
constexpr std::string_view kDemoEdges = R"(# Prostate-cancer demo network: 29 genes, 55 signed relations.
GJB5 SLAMF9 +
GJB5 PAK6 +
GJB5 COL17A1 +
GJB5 HCAR2 +
GJB5 C8A +
GJB5 S100A16 +
GJB5 KRT5 +
KCNE2 GJB5 +
KCNE2 SLAMF9 +
KCNE2 COL17A1 +
KCNE2 HCAR2 +
KCNE2 PAK6 +
KCNE2 KRT5 +
S100A16 PAK6 +
S100A16 PHLDA1 +
S100A16 C8A +
S100A16 PLAT +
ZNF577 RND2 +
ZNF577 SLC17A8 +
ZNF577 GAS6 +
ZNF577 BNIP3 +
GAS6 RND2 +
GAS6 BNIP3 +
GAS6 SLC17A8 +
GAS6 PAK6 +
KRT5 PAK6 +
KRT5 BNIP3 +
KRT5 ST18 +
COL17A1 BNIP3 +
COL17A1 C8A +
COL17A1 HCAR2 +
AQP10 SLC17A8 +
AQP10 ST18 +
AQP10 RND2 +
EMP1 SRPX2 +
EMP1 CSTF1 +
EMP1 LOC401459 -
PPP3R1 ZFAND2B +
PPP3R1 YWHAH +
CA9 S100A16 +
CA9 AQP10 +
SRPX2 LOC401459 +
SRPX2 CSTF1 -
SLC17A8 RND2 +
SLC17A8 BNIP3 +
PAK6 BNIP3 +
PAK6 RND2 +
RND2 BNIP3 +
PHLDA1 PLAT +
YWHAH PSMD1 +
KCNS2 SLC17A8 +
SLAMF9 HCAR2 +
MYO3A RND2 +
C8A PAK6 +
LOC401459 CSTF1 -
)";

}  // namespace

std::string_view demo_network_edge_list() { return kDemoEdges; }

GeneNetwork demo_network() { return load_edge_list(kDemoEdges); }

}  // namespace grnet
