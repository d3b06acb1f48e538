#pragma once

#include <esum/bigreal.hpp>

#include <stdexcept>
#include <string>

// Reference values frozen to 32 significant digits. Each entry was produced
// by an independent implementation (exact partial sums plus Richardson or
// averaging extrapolation, run far past the quoted precision) before the
// library existed, so the table can arbitrate rather than echo the engine.
namespace esum_test {

struct FrozenValue {
  const char* name;
  const char* value;
};

inline constexpr FrozenValue kFrozenTable[] = {
    {"zeta2", "1.6449340668482264364724151666460"},
    {"zeta3", "1.2020569031595942853997381615114"},
    {"zeta4", "1.0823232337111381915160036965412"},
    {"zeta5", "1.0369277551433699263313654864570"},
    {"zeta6", "1.0173430619844491397145179297909"},
    {"zeta7", "1.0083492773819228268397975498498"},
    {"zeta8", "1.0040773561979443393786852385087"},
    {"zeta9", "1.0020083928260822144178527692324"},
    {"zeta10", "1.0009945751278180853371459589003"},
    {"ln2", "0.69314718055994530941723212145818"},
    {"gamma", "0.57721566490153286060651209008240"},
    {"li2_half", "0.58224052646501250590265632015968"},
    {"li4_half", "0.51747906167389938633075816189886"},
    {"li5_half", "0.50840057924226870745910884925859"},
    {"eta4", "0.94703282949724591757650323447352"},
    {"S_1_2", "2.4041138063191885707994763230229"},
    {"S_2_3", "1.2657381527467236861001116353987"},
    {"S_11_4", "1.2218799453198801385188064752910"},
    {"S_12_3", "1.4716926364918071866349145530824"},
    {"S_111_2", "12.346581901730995381510740306055"},
    {"S_3_5", "1.0417850291827918833899900208023"},
    {"S_22_4", "1.1364239127408992837632791587591"},
    {"S_1_7", "1.0127278852975054448795616478883"},
    {"S_1_2b", "0.75128556447474642837483635094466"},
    {"S_1b_4b", "0.97778514774250539327959721062492"},
    {"S_112_2", "6.3658037253141363618519730843996"},
    {"S_1b1b1b_3", "1.0492495032521274909946241948193"},
    {"S_2_4b", "0.93470789934925325519754285148219"},
    {"S_2b_4", "1.0635822410181490988015483357516"},
    {"S_1b2_3", "1.1593533435695141597545702795992"},
    {"S_1b1b_3", "1.0748094737228177761088648444808"},
    {"S_11b_3", "1.2154357281397356181827585244210"},
    {"S_1b1b_4b", "0.99252558259658719423008049604331"},
    {"S_1b_2", "1.4097578901743805648619352481107"},
    {"S_1b_3", "1.1198781077362303036813332717386"},
    {"S_1b_4", "1.0463958250867771039020694563626"},
    {"S_2_6", "1.0218970966147803277413447687574"},
    {"S_2_8", "1.0051170448062179175611929157390"},
    {"S_1_5b", "0.95915194250431815716542113748201"},
    {"S_1b_5b", "0.98744142640329971377165000804182"},
    {"z_2_1", "1.2020569031595942853997381615114"},
    {"z_3_1", "0.27058080842778454787900092413529"},
    {"z_2_1_1", "1.0823232337111381915160036965412"},
    {"z_6bar", "-0.98555109129743510409843924448495"},
    {"z_4bar_2", "0.050843191948181848900896393002764"},
    {"z_5bar_1", "0.026399148793116946933018107002949"},
    {"z_2_1_2", "0.71156619755057243209697380608640"},
    {"zs_2_1", "2.4041138063191885707994763230229"},
    {"zs_5bar_1bar", "0.98744142640329971377165000804182"},
    {"zs_4_2bar", "-1.0635822410181490988015483357516"},
    {"t1_2_2_2", "1.7937423602911193146192137333774"},
    {"t1_1_2_3", "1.4781967648814372769843472018004"},
    {"t2_2_2_2", "-5.3360876138304585042943358623136"},
    {"delta_5_12", "1.6402023473972140661755146125566"},
    {"delta_5_14", "34.756838479703501166257478472938"},
    {"delta_ln2sq_unit", "1.6402023473972140661755146125566"},
};

inline std::string frozen(const std::string& name) {
  for (const auto& row : kFrozenTable) {
    if (name == row.name) return row.value;
  }
  throw std::out_of_range("no frozen value named " + name);
}

// Matched digits between a computed value and a frozen reference, evaluated
// at the current working precision.
inline int digits_vs_frozen(const esum::BigReal& computed, const std::string& name) {
  return esum::digits_matched(computed, esum::make_real(frozen(name)));
}

}  // namespace esum_test
