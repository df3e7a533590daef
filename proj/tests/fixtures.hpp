// Expected numeric values for the test suite, computed by an
// independent generator. Regenerate rather than editing by hand.
#pragma once

#include <vector>

namespace fixtures {

using Vec = std::vector<double>;
using IVec = std::vector<int>;

struct EdmRow {
  int case_id;
  double edm;
  Vec conclusion;
  double rpcf;
  Vec conclusion_alt;  // complemented-base reading (empty if unused)
  double rpcf_alt;
};

struct BaselineRow {
  int case_id;
  Vec conclusion;
  double rpcf;
};

// 35-point common-grid extensions of the benchmark vectors.
inline const Vec kGridAntecedent = {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.9, 0.8, 0.7, 0.6000000000000001, 0.5, 0.4, 0.3, 0.2571428571428571, 0.2142857142857143, 0.17142857142857143, 0.1285714285714286, 0.08571428571428572, 0.04285714285714287, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
inline const Vec kGridConsequent = {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.06, 0.12, 0.18, 0.24, 0.3, 0.43999999999999995, 0.58, 0.72, 0.8599999999999999, 1.0};
inline const Vec kGridTiltedAntecedent = {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.8857142857142857, 0.7714285714285715, 0.6571428571428571, 0.5428571428571429, 0.4285714285714285, 0.3142857142857143, 0.2, 0.17142857142857143, 0.14285714285714288, 0.1142857142857143, 0.08571428571428573, 0.057142857142857134, 0.02857142857142858, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
inline const Vec kGridTiltedConsequent = {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.04000000000000001, 0.08000000000000002, 0.12, 0.16000000000000003, 0.2, 0.36000000000000004, 0.52, 0.6799999999999999, 0.8400000000000001, 1.0};

// Forward walkthrough, small rule (3 -> 4): identity premise.
inline const Vec kSmallExtendedAntecedent = {1.0, 1.0, 1.0, 1.0, 0.85, 0.7, 0.55, 0.4, 0.30000000000000004, 0.2, 0.09999999999999998, 0.0};

// Forward walkthrough, medium rule (4 -> 6): premise [1, 0.9, 0.3, 0].
inline const Vec kMediumExtendedAntecedent = {1.0, 1.0, 1.0, 0.9333333333333333, 0.8666666666666667, 0.8, 0.6666666666666667, 0.5333333333333334, 0.4, 0.2666666666666667, 0.13333333333333336, 0.0};
inline const Vec kMediumExtendedConsequent = {0.0, 0.0, 0.1, 0.2, 0.30000000000000004, 0.4, 0.55, 0.7, 0.8, 0.9, 0.95, 1.0};
inline const Vec kMediumExtendedPremise = {1.0, 1.0, 1.0, 0.9666666666666667, 0.9333333333333333, 0.9, 0.7, 0.5, 0.3, 0.2, 0.1, 0.0};
inline constexpr double kMediumEdm = 0.052704627669472995;
inline const IVec kMediumSign3 = {0, 0, 0, 1, 1, 1, 1, -1, -1, -1, -1, 0};
inline const IVec kMediumSign2 = {1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, 1};
inline const Vec kMediumQuasiQuasi3 = {0.0, 0.0, 0.1, 0.252704627669473, 0.352704627669473, 0.452704627669473, 0.6027046276694731, 0.6472953723305269, 0.747295372330527, 0.847295372330527, 0.8972953723305269, 1.0};
inline const Vec kMediumQuasi3 = {0.0, 0.252704627669473, 0.452704627669473, 0.6472953723305269, 0.847295372330527, 1.0};
inline const Vec kMediumConclusion3 = {0.0, 0.252704627669473, 0.452704627669473, 0.6472953723305269, 0.847295372330527, 1.0};
inline const Vec kMediumQuasiQuasi2 = {0.052704627669472995, 0.052704627669472995, 0.15270462766947301, 0.252704627669473, 0.352704627669473, 0.452704627669473, 0.6027046276694731, 0.6472953723305269, 0.747295372330527, 0.847295372330527, 0.8972953723305269, 1.052704627669473};
inline const Vec kMediumQuasi2 = {0.052704627669472995, 0.252704627669473, 0.452704627669473, 0.6472953723305269, 0.847295372330527, 1.052704627669473};
inline const Vec kMediumConclusion2 = {0.0, 0.20000000000000004, 0.4000000000000001, 0.594590744661054, 0.7945907446610541, 1.0};

// Backward walkthrough, small rule: identity premise [1, 0.6, 0.3, 0].
inline const Vec kSmallBackwardConclusion = {0.0, 0.6, 1.0};

// Backward walkthrough, medium rule: premise [1, 0.9, 0.8, 0.3, 0.1, 0].
inline const Vec kMediumBackwardExtendedPremise = {1.0, 1.0, 0.95, 0.9, 0.8500000000000001, 0.8, 0.55, 0.3, 0.2, 0.1, 0.05, 0.0};
inline constexpr double kMediumBackwardEdm = 0.08416254115301736;
inline const IVec kMediumBackwardSign3 = {0, 0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0};
inline const IVec kMediumBackwardSign2 = {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
inline const Vec kMediumBackwardQuasiQuasi3 = {0.0, 0.0, 0.08416254115301736, 0.150829207819684, 0.21749587448635066, 0.2841625411530173, 0.4174958744863506, 0.4666666666666666, 0.6, 0.7333333333333333, 0.8666666666666667, 1.0};
inline const Vec kMediumBackwardConclusion3 = {0.0, 0.21837936204508948, 0.563241275909821, 1.0};
inline const Vec kMediumBackwardConclusion2 = {0.0, 0.19999999999999996, 0.6, 1.0};

// Distance-method benchmark rows: [class][form] keyed as c<1|2>f<3|2>.
inline const std::vector<EdmRow> kEdmFmpC1F3 = {
    {1, 0.0, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0, {}, 0.0},
    {2, 0.10756914225982259, {0.09712183028171449, 0.0, 0.0, 0.0, 0.09712183028171449, 0.3679852811972001, 1.0}, 93.25387226056245, {}, 0.0},
    {3, 0.12242907839829807, {0.0, 0.12242907839829807, 0.12242907839829807, 0.12242907839829807, 0.0, 0.3, 1.0}, 91.21414581857057, {}, 0.0},
    {4, 0.8696234230741394, {0.0, 0.0, 1.0, 1.0, 1.0, 0.8275115457794978, 0.4250384859316597}, 63.53499954698347, {}, 0.0}};
inline constexpr double kEdmFmpC1F3Avg = 87.00075440652913;
inline const std::vector<EdmRow> kEdmFmpC1F2 = {
    {1, 0.0, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0, {}, 0.0},
    {2, 0.10756914225982259, {0.1770483962693112, 0.0, 0.0, 0.0, 0.1770483962693112, 0.42393387738851784, 1.0}, 90.17099042961229, {}, 0.0},
    {3, 0.12242907839829807, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 1.0}, 96.46110632135478, {}, 0.0},
    {4, 0.8696234230741394, {0.0, 0.0, 1.0, 1.0, 1.0, 0.8275115457794978, 0.4250384859316597}, 63.53499954698347, {}, 0.0}};
inline constexpr double kEdmFmpC1F2Avg = 87.54177407448765;
inline const std::vector<EdmRow> kEdmFmpC2F3 = {
    {1, 0.0, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0, {}, 0.0},
    {2, 0.10756914225982259, {0.09712183028171449, 0.0, 0.0, 0.0, 0.09712183028171449, 0.3679852811972001, 1.0}, 93.25387226056245, {}, 0.0},
    {3, 0.12242907839829807, {0.0, 0.12242907839829807, 0.12242907839829807, 0.12242907839829807, 0.0, 0.3, 1.0}, 91.21414581857057, {}, 0.0},
    {5, 0.036700664510471805, {0.035401409265809425, 0.0, 0.0, 0.0, 0.035401409265809425, 0.22832112741264757, 1.0}, 98.58394362936762, {}, 0.0}};
inline constexpr double kEdmFmpC2F3Avg = 95.76299042712516;
inline const std::vector<EdmRow> kEdmFmpC2F2 = {
    {1, 0.0, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0, {}, 0.0},
    {2, 0.10756914225982259, {0.1770483962693112, 0.0, 0.0, 0.0, 0.1770483962693112, 0.42393387738851784, 1.0}, 90.17099042961229, {}, 0.0},
    {3, 0.12242907839829807, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 1.0}, 96.46110632135478, {}, 0.0},
    {5, 0.036700664510471805, {0.06838199938497697, 0.0, 0.0, 0.0, 0.06838199938497697, 0.2547055995079816, 1.0}, 97.26472002460092, {}, 0.0}};
inline constexpr double kEdmFmpC2F2Avg = 95.974204193892;
inline const std::vector<EdmRow> kEdmFmtC1F3 = {
    {6, 3.510833468576701e-17, {0.0, 0.7, 1.0, 1.0, 1.0}, 100.0, {}, 0.0},
    {7, 0.09081857582172118, {0.0, 0.6417199115560395, 0.9167427307943422, 1.0, 0.9167427307943422}, 91.30410746289448, {}, 0.0},
    {8, 0.10321261374717691, {0.0, 0.7, 1.0, 0.8967873862528231, 1.0}, 92.98129657495315, {}, 0.0},
    {9, 0.9093796943914179, {0.0, 0.2483362016586545, 0.35476600236950645, 0.35476600236950645, 1.0}, 44.77608393839283, {0.5498253403762373, 0.1649476021128712, 0.0, 0.0, 1.0}, 68.29545884978218}};
inline constexpr double kEdmFmtC1F3Avg = 82.26537199406012;
inline constexpr double kEdmFmtC1F3AvgAlt = 88.14521572190745;
inline const std::vector<EdmRow> kEdmFmtC1F2 = {
    {6, 3.510833468576701e-17, {0.0, 0.7, 1.0, 1.0, 1.0}, 100.0, {}, 0.0},
    {7, 0.09081857582172118, {0.0, 0.7, 1.0, 1.0, 1.0}, 95.8, {}, 0.0},
    {8, 0.10321261374717691, {0.0, 0.7, 1.0, 0.7935747725056461, 1.0}, 90.9170443000096, {}, 0.0},
    {9, 0.9093796943914179, {0.0, 0.2483362016586545, 0.35476600236950645, 0.35476600236950645, 1.0}, 44.77608393839283, {0.5498253403762373, 0.1649476021128712, 0.0, 0.0, 1.0}, 68.29545884978218}};
inline constexpr double kEdmFmtC1F2Avg = 82.87328205960061;
inline constexpr double kEdmFmtC1F2AvgAlt = 88.75312578744794;
inline const std::vector<EdmRow> kEdmFmtC2F3 = {
    {6, 3.510833468576701e-17, {0.0, 0.7, 1.0, 1.0, 1.0}, 100.0, {}, 0.0},
    {7, 0.09081857582172118, {0.0, 0.6417199115560395, 0.9167427307943422, 1.0, 0.9167427307943422}, 91.30410746289448, {}, 0.0},
    {8, 0.10321261374717691, {0.0, 0.7, 1.0, 0.8967873862528231, 1.0}, 92.98129657495315, {}, 0.0},
    {10, 0.9141741003300661, {0.5469417694282447, 0.10938835388564891, 0.0, 0.0, 1.0}, 69.12660246627787, {}, 0.0}};
inline constexpr double kEdmFmtC2F3Avg = 88.35300162603137;
inline constexpr double kEdmFmtC2F3AvgAlt = 88.35300162603137;
inline const std::vector<EdmRow> kEdmFmtC2F2 = {
    {6, 3.510833468576701e-17, {0.0, 0.7, 1.0, 1.0, 1.0}, 100.0, {}, 0.0},
    {7, 0.09081857582172118, {0.0, 0.7, 1.0, 1.0, 1.0}, 95.8, {}, 0.0},
    {8, 0.10321261374717691, {0.0, 0.7, 1.0, 0.7935747725056461, 1.0}, 90.9170443000096, {}, 0.0},
    {10, 0.9141741003300661, {0.5469417694282447, 0.10938835388564891, 0.0, 0.0, 1.0}, 69.12660246627787, {}, 0.0}};
inline constexpr double kEdmFmtC2F2Avg = 88.96091169157187;
inline constexpr double kEdmFmtC2F2AvgAlt = 88.96091169157187;

// Two-level distance-method averages.
inline constexpr double kEdmBothClassesFmpF3 = 91.38187241682715;
inline constexpr double kEdmBothClassesFmpF2 = 91.75798913418983;
inline constexpr double kEdmBothClassesFmtAltF3 = 88.2491086739694;
inline constexpr double kEdmBothClassesFmtAltF2 = 88.8570187395099;
inline constexpr double kEdmBothClassesFmtF3 = 85.30918681004574;
inline constexpr double kEdmBothClassesFmtF2 = 85.91709687558624;
inline constexpr double kEdmOverallAltF3 = 89.81549054539828;
inline constexpr double kEdmOverallAltF2 = 90.30750393684986;

// Baseline benchmark rows on the common grid.
inline const std::vector<BaselineRow> kCriLukasiewiczC1Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 1.0}, 97.0},
    {3, {0.24994969569425285, 0.24994969569425285, 0.24994969569425285, 0.24994969569425285, 0.24994969569425285, 0.5477225575051661, 1.0}, 82.14645030755337},
    {4, {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0}, 81.42857142857143}};
inline const std::vector<BaselineRow> kCriLukasiewiczC1Fmt = {
    {6, {1.0, 1.0, 1.0, 1.0, 1.0}, 74.0},
    {7, {1.0, 1.0, 1.0, 1.0, 1.0}, 78.2},
    {8, {1.0, 1.0, 1.0, 1.0, 1.0}, 69.04554884989668},
    {9, {1.0, 1.0, 1.0, 1.0, 1.0}, 26.0}};
inline constexpr double kCriLukasiewiczC1FmpAvg = 90.1437554340312;
inline constexpr double kCriLukasiewiczC1FmtAvg = 61.811387212474166;
inline const std::vector<BaselineRow> kCriGodelC1Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 97.0},
    {3, {0.0, 0.0, 0.0, 0.0, 0.0, 0.5477225575051661, 1.0}, 100.0},
    {4, {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0}, 81.42857142857143}};
inline const std::vector<BaselineRow> kCriGodelC1Fmt = {
    {6, {1.0, 1.0, 1.0, 1.0, 1.0}, 74.0},
    {7, {1.0, 1.0, 1.0, 1.0, 1.0}, 78.2},
    {8, {1.0, 1.0, 1.0, 1.0, 1.0}, 69.04554884989668},
    {9, {1.0, 1.0, 1.0, 1.0, 1.0}, 26.0}};
inline constexpr double kCriGodelC1FmpAvg = 94.60714285714286;
inline constexpr double kCriGodelC1FmtAvg = 61.811387212474166;
inline const std::vector<BaselineRow> kCriR0C1Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 97.0},
    {3, {0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 1.0}, 56.396036535788085},
    {4, {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0}, 81.42857142857143}};
inline const std::vector<BaselineRow> kCriR0C1Fmt = {
    {6, {1.0, 1.0, 1.0, 1.0, 1.0}, 74.0},
    {7, {1.0, 1.0, 1.0, 1.0, 1.0}, 78.2},
    {8, {1.0, 1.0, 1.0, 1.0, 1.0}, 69.04554884989668},
    {9, {1.0, 1.0, 1.0, 1.0, 1.0}, 26.0}};
inline constexpr double kCriR0C1FmpAvg = 83.70615199108988;
inline constexpr double kCriR0C1FmtAvg = 61.811387212474166;
inline const std::vector<BaselineRow> kCriGoguenC1Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 97.0},
    {3, {0.0, 0.0, 0.0, 0.0, 0.0, 0.5477225575051661, 1.0}, 100.0},
    {4, {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0}, 81.42857142857143}};
inline const std::vector<BaselineRow> kCriGoguenC1Fmt = {
    {6, {1.0, 1.0, 1.0, 1.0, 1.0}, 74.0},
    {7, {1.0, 1.0, 1.0, 1.0, 1.0}, 78.2},
    {8, {1.0, 1.0, 1.0, 1.0, 1.0}, 69.04554884989668},
    {9, {1.0, 1.0, 1.0, 1.0, 1.0}, 26.0}};
inline constexpr double kCriGoguenC1FmpAvg = 94.60714285714286;
inline constexpr double kCriGoguenC1FmtAvg = 61.811387212474166;
inline const std::vector<BaselineRow> kTipLukasiewiczC1Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 1.0}, 97.0},
    {3, {0.24994969569425285, 0.24994969569425285, 0.24994969569425285, 0.24994969569425285, 0.24994969569425285, 0.5477225575051661, 1.0}, 82.14645030755337},
    {4, {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0}, 81.42857142857143}};
inline const std::vector<BaselineRow> kTipLukasiewiczC1Fmt = {
    {6, {0.0, 0.0, 0.0, 0.0, 0.0}, 26.0},
    {7, {0.0, 0.0, 0.0, 0.0, 0.0}, 21.799999999999997},
    {8, {0.0, 0.0, 0.0, 0.0, 0.0}, 30.954451150103313},
    {9, {1.0, 0.3, 0.0, 0.0, 0.0}, 100.0}};
inline constexpr double kTipLukasiewiczC1FmpAvg = 90.1437554340312;
inline constexpr double kTipLukasiewiczC1FmtAvg = 44.68861278752583;
inline const std::vector<BaselineRow> kTipGodelC1Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 97.0},
    {3, {0.0, 0.0, 0.0, 0.0, 0.0, 0.5477225575051661, 1.0}, 100.0},
    {4, {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0}, 81.42857142857143}};
inline const std::vector<BaselineRow> kTipGodelC1Fmt = {
    {6, {0.0, 0.0, 0.0, 0.0, 0.0}, 26.0},
    {7, {0.0, 0.0, 0.0, 0.0, 0.0}, 21.799999999999997},
    {8, {0.0, 0.0, 0.0, 0.0, 0.0}, 30.954451150103313},
    {9, {1.0, 0.3, 0.0, 0.0, 0.0}, 100.0}};
inline constexpr double kTipGodelC1FmpAvg = 94.60714285714286;
inline constexpr double kTipGodelC1FmtAvg = 44.68861278752583;
inline const std::vector<BaselineRow> kTipR0C1Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 97.0},
    {3, {0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 1.0}, 56.396036535788085},
    {4, {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0}, 81.42857142857143}};
inline const std::vector<BaselineRow> kTipR0C1Fmt = {
    {6, {0.0, 0.0, 0.0, 0.0, 0.0}, 26.0},
    {7, {0.0, 0.0, 0.0, 0.0, 0.0}, 21.799999999999997},
    {8, {0.0, 0.0, 0.0, 0.0, 0.0}, 30.954451150103313},
    {9, {1.0, 0.3, 0.0, 0.0, 0.0}, 100.0}};
inline constexpr double kTipR0C1FmpAvg = 83.70615199108988;
inline constexpr double kTipR0C1FmtAvg = 44.68861278752583;
inline const std::vector<BaselineRow> kTipGoguenC1Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 97.0},
    {3, {0.0, 0.0, 0.0, 0.0, 0.0, 0.5477225575051661, 1.0}, 100.0},
    {4, {1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0}, 81.42857142857143}};
inline const std::vector<BaselineRow> kTipGoguenC1Fmt = {
    {6, {0.0, 0.0, 0.0, 0.0, 0.0}, 26.0},
    {7, {0.0, 0.0, 0.0, 0.0, 0.0}, 21.799999999999997},
    {8, {0.0, 0.0, 0.0, 0.0, 0.0}, 30.954451150103313},
    {9, {1.0, 0.3, 0.0, 0.0, 0.0}, 100.0}};
inline constexpr double kTipGoguenC1FmpAvg = 94.60714285714286;
inline constexpr double kTipGoguenC1FmtAvg = 44.68861278752583;
inline const std::vector<BaselineRow> kQipLukasiewiczC1Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 1.0}, 97.0},
    {3, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 1.0}, 96.46110632135478},
    {4, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 0.5}, 15.714285714285714}};
inline const std::vector<BaselineRow> kQipLukasiewiczC1Fmt = {
    {6, {0.43999999999999995, 0.30000000000000004, 0.0, 0.0, 0.0}, 23.2},
    {7, {0.5800000000000001, 0.30000000000000004, 0.0, 0.0, 0.0}, 16.200000000000014},
    {8, {0.33667504192891995, 0.30000000000000004, 0.0, 0.0, 0.0}, 30.22095031152492},
    {9, {1.0, 0.30000000000000004, 0.0, 0.0, 0.0}, 100.0}};
inline constexpr double kQipLukasiewiczC1FmpAvg = 77.29384800891013;
inline constexpr double kQipLukasiewiczC1FmtAvg = 42.40523757788124;
inline const std::vector<BaselineRow> kQipGodelC1Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 97.0},
    {3, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 96.46110632135478},
    {4, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 0.5}, 15.714285714285714}};
inline const std::vector<BaselineRow> kQipGodelC1Fmt = {
    {6, {0.43999999999999995, 0.3, 0.0, 0.0, 0.0}, 23.2},
    {7, {0.58, 0.3, 0.0, 0.0, 0.0}, 16.200000000000014},
    {8, {0.33667504192892006, 0.3, 0.0, 0.0, 0.0}, 30.22095031152492},
    {9, {1.0, 0.3, 0.0, 0.0, 0.0}, 100.0}};
inline constexpr double kQipGodelC1FmpAvg = 77.29384800891013;
inline constexpr double kQipGodelC1FmtAvg = 42.40523757788124;
inline const std::vector<BaselineRow> kQipR0C1Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 97.0},
    {3, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 96.46110632135478},
    {4, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5}, 11.428571428571422}};
inline const std::vector<BaselineRow> kQipR0C1Fmt = {
    {6, {0.43999999999999995, 0.3, 0.0, 0.0, 0.0}, 23.2},
    {7, {0.58, 0.3, 0.0, 0.0, 0.0}, 16.200000000000014},
    {8, {0.3, 0.3, 0.0, 0.0, 0.0}, 30.954451150103313},
    {9, {1.0, 0.3, 0.0, 0.0, 0.0}, 100.0}};
inline constexpr double kQipR0C1FmpAvg = 76.22241943748156;
inline constexpr double kQipR0C1FmtAvg = 42.58861278752583;
inline const std::vector<BaselineRow> kQipGoguenC1Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 97.0},
    {3, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 1.0}, 96.46110632135478},
    {4, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 0.5}, 15.714285714285714}};
inline const std::vector<BaselineRow> kQipGoguenC1Fmt = {
    {6, {0.43999999999999995, 0.3, 0.0, 0.0, 0.0}, 23.2},
    {7, {0.58, 0.3, 0.0, 0.0, 0.0}, 16.200000000000014},
    {8, {0.33667504192892006, 0.3, 0.0, 0.0, 0.0}, 30.22095031152492},
    {9, {1.0, 0.3, 0.0, 0.0, 0.0}, 100.0}};
inline constexpr double kQipGoguenC1FmpAvg = 77.29384800891013;
inline constexpr double kQipGoguenC1FmtAvg = 42.40523757788124;
inline const std::vector<BaselineRow> kAarsMolC1Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.33227074267794676, 1.0}, 96.53898939031504},
    {3, {0.0, 0.0, 0.0, 0.0, 0.0, 0.33672872351948935, 1.0}, 96.98580237163318},
    {4, {0.0, 0.0, 0.0, 0.0, 0.0, 0.5608870269222418, 1.0}, 12.29838609888917}};
inline const std::vector<BaselineRow> kAarsMolC1Fmt = {
    {6, {1.0, 0.5728139083174253, 0.0, 0.0, 0.0}, 17.456278166348515},
    {7, {1.0, 0.5762117843353435, 0.0, 0.0, 0.0}, 13.324235686706876},
    {8, {1.0, 0.5687642125745986, 0.0, 0.0, 0.0}, 17.670264598404707},
    {9, {1.0, 0.3, 0.0, 0.0, 0.0}, 100.0}};
inline constexpr double kAarsMolC1FmpAvg = 76.45579446520935;
inline constexpr double kAarsMolC1FmtAvg = 37.11269461286503;
inline const std::vector<BaselineRow> kAarsRedC1Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.27086345091548564, 0.9028781697182855}, 96.02878169718285},
    {3, {0.0, 0.0, 0.0, 0.0, 0.0, 0.26727746614342784, 0.8909248871447595}, 94.43542565404316},
    {4, {0.0, 0.0, 0.0, 0.0, 0.0, 0.16046012063045467, 0.5348670687681822}, 13.222757883746738}};
inline const std::vector<BaselineRow> kAarsRedC1Fmt = {
    {6, {0.5237302999174991, 0.15711908997524973, 0.0, 0.0, 0.0}, 18.667775801155017},
    {7, {0.5206419031260321, 0.1561925709378096, 0.0, 0.0, 0.0}, 14.511013356235548},
    {8, {0.5274593467159333, 0.15823780401478, 0.0, 0.0, 0.0}, 23.570020296080262},
    {9, {1.0, 0.3, 0.0, 0.0, 0.0}, 100.0}};
inline constexpr double kAarsRedC1FmpAvg = 75.9217413087432;
inline constexpr double kAarsRedC1FmtAvg = 39.1872023633677;
inline const std::vector<BaselineRow> kCriLukasiewiczC2Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 1.0}, 97.0},
    {3, {0.24994969569425285, 0.24994969569425285, 0.24994969569425285, 0.24994969569425285, 0.24994969569425285, 0.5477225575051661, 1.0}, 82.14645030755337},
    {5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 1.0}, 98.57142857142858}};
inline const std::vector<BaselineRow> kCriLukasiewiczC2Fmt = {
    {6, {1.0, 1.0, 1.0, 1.0, 1.0}, 74.0},
    {7, {1.0, 1.0, 1.0, 1.0, 1.0}, 78.2},
    {8, {1.0, 1.0, 1.0, 1.0, 1.0}, 69.04554884989668},
    {10, {1.0, 1.0, 1.0, 1.0, 1.0}, 24.0}};
inline constexpr double kCriLukasiewiczC2FmpAvg = 94.4294697197455;
inline constexpr double kCriLukasiewiczC2FmtAvg = 61.311387212474166;
inline const std::vector<BaselineRow> kCriGodelC2Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 97.0},
    {3, {0.0, 0.0, 0.0, 0.0, 0.0, 0.5477225575051661, 1.0}, 100.0},
    {5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 98.57142857142858}};
inline const std::vector<BaselineRow> kCriGodelC2Fmt = {
    {6, {1.0, 1.0, 1.0, 1.0, 1.0}, 74.0},
    {7, {1.0, 1.0, 1.0, 1.0, 1.0}, 78.2},
    {8, {1.0, 1.0, 1.0, 1.0, 1.0}, 69.04554884989668},
    {10, {1.0, 1.0, 1.0, 1.0, 1.0}, 24.0}};
inline constexpr double kCriGodelC2FmpAvg = 98.89285714285714;
inline constexpr double kCriGodelC2FmtAvg = 61.311387212474166;
inline const std::vector<BaselineRow> kCriR0C2Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 97.0},
    {3, {0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 1.0}, 56.396036535788085},
    {5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 98.57142857142858}};
inline const std::vector<BaselineRow> kCriR0C2Fmt = {
    {6, {1.0, 1.0, 1.0, 1.0, 1.0}, 74.0},
    {7, {1.0, 1.0, 1.0, 1.0, 1.0}, 78.2},
    {8, {1.0, 1.0, 1.0, 1.0, 1.0}, 69.04554884989668},
    {10, {1.0, 1.0, 1.0, 1.0, 1.0}, 24.0}};
inline constexpr double kCriR0C2FmpAvg = 87.99186627680416;
inline constexpr double kCriR0C2FmtAvg = 61.311387212474166;
inline const std::vector<BaselineRow> kCriGoguenC2Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 97.0},
    {3, {0.0, 0.0, 0.0, 0.0, 0.0, 0.5477225575051661, 1.0}, 100.0},
    {5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 98.57142857142858}};
inline const std::vector<BaselineRow> kCriGoguenC2Fmt = {
    {6, {1.0, 1.0, 1.0, 1.0, 1.0}, 74.0},
    {7, {1.0, 1.0, 1.0, 1.0, 1.0}, 78.2},
    {8, {1.0, 1.0, 1.0, 1.0, 1.0}, 69.04554884989668},
    {10, {1.0, 1.0, 1.0, 1.0, 1.0}, 24.0}};
inline constexpr double kCriGoguenC2FmpAvg = 98.89285714285714;
inline constexpr double kCriGoguenC2FmtAvg = 61.311387212474166;
inline const std::vector<BaselineRow> kTipLukasiewiczC2Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 1.0}, 97.0},
    {3, {0.24994969569425285, 0.24994969569425285, 0.24994969569425285, 0.24994969569425285, 0.24994969569425285, 0.5477225575051661, 1.0}, 82.14645030755337},
    {5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 1.0}, 98.57142857142858}};
inline const std::vector<BaselineRow> kTipLukasiewiczC2Fmt = {
    {6, {0.0, 0.0, 0.0, 0.0, 0.0}, 26.0},
    {7, {0.0, 0.0, 0.0, 0.0, 0.0}, 21.799999999999997},
    {8, {0.0, 0.0, 0.0, 0.0, 0.0}, 30.954451150103313},
    {10, {0.8999999999999999, 0.2, 0.0, 0.0, 0.0}, 98.0}};
inline constexpr double kTipLukasiewiczC2FmpAvg = 94.4294697197455;
inline constexpr double kTipLukasiewiczC2FmtAvg = 44.18861278752583;
inline const std::vector<BaselineRow> kTipGodelC2Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 97.0},
    {3, {0.0, 0.0, 0.0, 0.0, 0.0, 0.5477225575051661, 1.0}, 100.0},
    {5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 98.57142857142858}};
inline const std::vector<BaselineRow> kTipGodelC2Fmt = {
    {6, {0.0, 0.0, 0.0, 0.0, 0.0}, 26.0},
    {7, {0.0, 0.0, 0.0, 0.0, 0.0}, 21.799999999999997},
    {8, {0.0, 0.0, 0.0, 0.0, 0.0}, 30.954451150103313},
    {10, {0.04000000000000001, 0.04000000000000001, 0.0, 0.0, 0.0}, 77.60000000000001}};
inline constexpr double kTipGodelC2FmpAvg = 98.89285714285714;
inline constexpr double kTipGodelC2FmtAvg = 39.08861278752583;
inline const std::vector<BaselineRow> kTipR0C2Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 97.0},
    {3, {0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 1.0}, 56.396036535788085},
    {5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 98.57142857142858}};
inline const std::vector<BaselineRow> kTipR0C2Fmt = {
    {6, {0.0, 0.0, 0.0, 0.0, 0.0}, 26.0},
    {7, {0.0, 0.0, 0.0, 0.0, 0.0}, 21.799999999999997},
    {8, {0.0, 0.0, 0.0, 0.0, 0.0}, 30.954451150103313},
    {10, {0.52, 0.2, 0.0, 0.0, 0.0}, 90.4}};
inline constexpr double kTipR0C2FmpAvg = 87.99186627680416;
inline constexpr double kTipR0C2FmtAvg = 42.28861278752583;
inline const std::vector<BaselineRow> kTipGoguenC2Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 97.0},
    {3, {0.0, 0.0, 0.0, 0.0, 0.0, 0.5477225575051661, 1.0}, 100.0},
    {5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 98.57142857142858}};
inline const std::vector<BaselineRow> kTipGoguenC2Fmt = {
    {6, {0.0, 0.0, 0.0, 0.0, 0.0}, 26.0},
    {7, {0.0, 0.0, 0.0, 0.0, 0.0}, 21.799999999999997},
    {8, {0.0, 0.0, 0.0, 0.0, 0.0}, 30.954451150103313},
    {10, {0.6666666666666666, 0.2, 0.0, 0.0, 0.0}, 93.33333333333333}};
inline constexpr double kTipGoguenC2FmpAvg = 98.89285714285714;
inline constexpr double kTipGoguenC2FmtAvg = 43.021946120859155;
inline const std::vector<BaselineRow> kQipLukasiewiczC2Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 1.0}, 97.0},
    {3, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 1.0}, 96.46110632135478},
    {5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 1.0}, 98.57142857142858}};
inline const std::vector<BaselineRow> kQipLukasiewiczC2Fmt = {
    {6, {0.43999999999999995, 0.30000000000000004, 0.0, 0.0, 0.0}, 23.2},
    {7, {0.5800000000000001, 0.30000000000000004, 0.0, 0.0, 0.0}, 16.200000000000014},
    {8, {0.33667504192891995, 0.30000000000000004, 0.0, 0.0, 0.0}, 30.22095031152492},
    {10, {1.0, 0.30000000000000004, 0.0, 0.0, 0.0}, 98.0}};
inline constexpr double kQipLukasiewiczC2FmpAvg = 98.00813372319584;
inline constexpr double kQipLukasiewiczC2FmtAvg = 41.90523757788124;
inline const std::vector<BaselineRow> kQipGodelC2Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 97.0},
    {3, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 96.46110632135478},
    {5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 98.57142857142858}};
inline const std::vector<BaselineRow> kQipGodelC2Fmt = {
    {6, {0.43999999999999995, 0.3, 0.0, 0.0, 0.0}, 23.2},
    {7, {0.58, 0.3, 0.0, 0.0, 0.0}, 16.200000000000014},
    {8, {0.33667504192892006, 0.3, 0.0, 0.0, 0.0}, 30.22095031152492},
    {10, {1.0, 0.3, 0.0, 0.0, 0.0}, 98.0}};
inline constexpr double kQipGodelC2FmpAvg = 98.00813372319584;
inline constexpr double kQipGodelC2FmtAvg = 41.90523757788124;
inline const std::vector<BaselineRow> kQipR0C2Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 97.0},
    {3, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 96.46110632135478},
    {5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 98.57142857142858}};
inline const std::vector<BaselineRow> kQipR0C2Fmt = {
    {6, {0.43999999999999995, 0.3, 0.0, 0.0, 0.0}, 23.2},
    {7, {0.58, 0.3, 0.0, 0.0, 0.0}, 16.200000000000014},
    {8, {0.3, 0.3, 0.0, 0.0, 0.0}, 30.954451150103313},
    {10, {1.0, 0.3, 0.0, 0.0, 0.0}, 98.0}};
inline constexpr double kQipR0C2FmpAvg = 98.00813372319584;
inline constexpr double kQipR0C2FmtAvg = 42.08861278752583;
inline const std::vector<BaselineRow> kQipGoguenC2Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 97.0},
    {3, {0.0, 0.0, 0.0, 0.0, 0.0, 0.30000000000000004, 1.0}, 96.46110632135478},
    {5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 98.57142857142858}};
inline const std::vector<BaselineRow> kQipGoguenC2Fmt = {
    {6, {0.43999999999999995, 0.3, 0.0, 0.0, 0.0}, 23.2},
    {7, {0.58, 0.3, 0.0, 0.0, 0.0}, 16.200000000000014},
    {8, {0.33667504192892006, 0.3, 0.0, 0.0, 0.0}, 30.22095031152492},
    {10, {1.0, 0.3, 0.0, 0.0, 0.0}, 98.0}};
inline constexpr double kQipGoguenC2FmpAvg = 98.00813372319584;
inline constexpr double kQipGoguenC2FmtAvg = 41.90523757788124;
inline const std::vector<BaselineRow> kAarsMolC2Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.33227074267794676, 1.0}, 96.53898939031504},
    {3, {0.0, 0.0, 0.0, 0.0, 0.0, 0.33672872351948935, 1.0}, 96.98580237163318},
    {5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3110101993531415, 1.0}, 98.41414000924084}};
inline const std::vector<BaselineRow> kAarsMolC2Fmt = {
    {6, {1.0, 0.5728139083174253, 0.0, 0.0, 0.0}, 17.456278166348515},
    {7, {1.0, 0.5762117843353435, 0.0, 0.0, 0.0}, 13.324235686706876},
    {8, {1.0, 0.5687642125745986, 0.0, 0.0, 0.0}, 17.670264598404707},
    {10, {1.0, 0.30935032466968776, 0.0, 0.0, 0.0}, 97.81299350660625}};
inline constexpr double kAarsMolC2FmpAvg = 97.98473294279727;
inline constexpr double kAarsMolC2FmtAvg = 36.565942989516586;
inline const std::vector<BaselineRow> kAarsRedC2Fmp = {
    {1, {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 1.0}, 100.0},
    {2, {0.0, 0.0, 0.0, 0.0, 0.0, 0.27086345091548564, 0.9028781697182855}, 96.02878169718285},
    {3, {0.0, 0.0, 0.0, 0.0, 0.0, 0.26727746614342784, 0.8909248871447595}, 94.43542565404316},
    {5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.2893795772202572, 0.9645985907341906}, 98.21741447877048}};
inline const std::vector<BaselineRow> kAarsRedC2Fmt = {
    {6, {0.5237302999174991, 0.15711908997524973, 0.0, 0.0, 0.0}, 18.667775801155017},
    {7, {0.5206419031260321, 0.1561925709378096, 0.0, 0.0, 0.0}, 14.511013356235548},
    {8, {0.5274593467159333, 0.15823780401478, 0.0, 0.0, 0.0}, 23.570020296080262},
    {10, {0.9697743175809765, 0.29093229527429293, 0.0, 0.0, 0.0}, 97.57684044613367}};
inline constexpr double kAarsRedC2FmpAvg = 97.17040545749913;
inline constexpr double kAarsRedC2FmtAvg = 38.58141247490113;

// Variant readings recorded alongside the faithful rows.
inline const Vec kStrictGodelMoreOrLessConclusion = {0.0, 0.0, 0.0, 0.0, 0.0, 0.50709255283711, 1.0};
inline constexpr double kStrictGodelMoreOrLessRpcf = 99.41957136188492;
inline constexpr double kCriBackwardVsTiltRpcf = 24.0;
inline constexpr double kAarsRedForwardVsComplementRpcf = 8.925442664086669;
inline constexpr double kAarsMolForwardVsComplementRpcf = 8.728717133616303;
inline const Vec kAarsRedBackwardTiltedConclusion = {1.0, 0.2, 0.0, 0.0, 0.0};
inline constexpr double kAarsRedBackwardTiltedRpcf = 100.0;

// Comprehensive two-class aggregates (faithful and variant readings).
inline constexpr double kAggEdmFmp = 91.56993077550848;
inline constexpr double kAggEdmFmtAlt = 88.55306370673966;
inline constexpr double kAggEdmFmt = 85.61314184281599;
inline constexpr double kAggCriFmp = 92.90890542770885;
inline constexpr double kAggCriFmt = 61.561387212474166;
inline constexpr double kAggTipFmp = 92.90890542770885;
inline constexpr double kAggTipFmt = 43.4177794541925;
inline constexpr double kAggQipFmp = 87.51706229462442;
inline constexpr double kAggQipFmt = 42.201081380292386;
inline constexpr double kAggAarsFmpAlt = 75.69708137541797;
inline constexpr double kAggAarsFmp = 86.88316854356223;
inline constexpr double kAggAarsFmt = 37.861813110162615;
inline constexpr double kAggAarsFmtAlt = 38.149948488116365;
inline constexpr double kSummaryEdmFamilyAvgAlt = 87.86021749759304;
inline constexpr double kSummaryEdmFamilyAvg = 84.92029563366938;

}  // namespace fixtures
