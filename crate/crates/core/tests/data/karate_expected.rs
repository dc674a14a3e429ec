// Frozen reference values for data/karate.txt, generated by an
// independent toolchain (networkx 3.4.2 + numpy + scipy). Do not edit.

pub const N: usize = 34;
pub const LABELS: [&str; 34] = ["1", "2", "3", "4", "5", "6", "7", "8", "9", "11", "12", "13", "14", "18", "20", "22", "32", "31", "10", "28", "29", "33", "17", "34", "15", "16", "19", "21", "23", "24", "26", "30", "25", "27"];

pub const CORE_RAW: [f64; 34] = [4.0, 4.0, 4.0, 4.0, 3.0, 3.0, 3.0, 4.0, 4.0, 3.0, 1.0, 2.0, 4.0, 2.0, 3.0, 2.0, 3.0, 4.0, 2.0, 3.0, 3.0, 4.0, 2.0, 4.0, 2.0, 2.0, 2.0, 2.0, 2.0, 3.0, 3.0, 3.0, 3.0, 2.0];
pub const TRUSS_RAW: [f64; 34] = [3.0, 3.0, 3.0, 3.0, 1.0, 1.0, 1.0, 3.0, 2.0, 1.0, 0.0, 1.0, 3.0, 1.0, 1.0, 1.0, 1.0, 2.0, 0.0, 1.0, 1.0, 2.0, 1.0, 2.0, 1.0, 1.0, 1.0, 1.0, 1.0, 2.0, 1.0, 2.0, 1.0, 1.0];
pub const TRUSS_KMIN: u32 = 2;
pub const TRUSS_KMAX: u32 = 5;
pub const LRC: [f64; 34] = [0.7020202020202018, 0.5808080808080806, 0.6363636363636364, 0.5353535353535352, 0.4444444444444446, 0.4595959595959597, 0.4595959595959597, 0.4974747474747476, 0.5606060606060606, 0.4444444444444446, 0.4090909090909092, 0.4242424242424244, 0.5606060606060606, 0.42929292929292945, 0.5303030303030303, 0.42929292929292945, 0.585858585858586, 0.5126262626262627, 0.4722222222222222, 0.5126262626262625, 0.4974747474747474, 0.6338383838383838, 0.3363636363636361, 0.7045454545454546, 0.43030303030303035, 0.43030303030303035, 0.43030303030303035, 0.43030303030303035, 0.43030303030303035, 0.4858585858585858, 0.42171717171717177, 0.46565656565656566, 0.4217171717171718, 0.42272727272727273];
pub const TP_RAW: [f64; 34] = [18.0, 12.0, 11.0, 10.0, 2.0, 3.0, 3.0, 6.0, 5.0, 2.0, 0.0, 1.0, 6.0, 1.0, 1.0, 1.0, 3.0, 3.0, 0.0, 1.0, 1.0, 13.0, 1.0, 15.0, 1.0, 1.0, 1.0, 1.0, 1.0, 4.0, 1.0, 4.0, 1.0, 1.0];

pub const DEGREE: [f64; 34] = [0.48484848484848486, 0.2727272727272727, 0.30303030303030304, 0.18181818181818182, 0.09090909090909091, 0.12121212121212122, 0.12121212121212122, 0.12121212121212122, 0.15151515151515152, 0.09090909090909091, 0.030303030303030304, 0.06060606060606061, 0.15151515151515152, 0.06060606060606061, 0.09090909090909091, 0.06060606060606061, 0.18181818181818182, 0.12121212121212122, 0.06060606060606061, 0.12121212121212122, 0.09090909090909091, 0.36363636363636365, 0.06060606060606061, 0.5151515151515151, 0.06060606060606061, 0.06060606060606061, 0.06060606060606061, 0.06060606060606061, 0.06060606060606061, 0.15151515151515152, 0.09090909090909091, 0.12121212121212122, 0.09090909090909091, 0.06060606060606061];
pub const LOCAL: [f64; 34] = [2.090909090909091, 1.5757575757575757, 2.0, 1.393939393939394, 0.696969696969697, 0.7575757575757576, 0.7575757575757576, 1.2424242424242424, 1.7878787878787878, 0.696969696969697, 0.48484848484848486, 0.6666666666666666, 1.7575757575757576, 0.7575757575757576, 1.2727272727272727, 0.7575757575757576, 1.6363636363636365, 1.303030303030303, 0.8181818181818182, 1.0606060606060606, 1.0, 1.8484848484848484, 0.24242424242424243, 1.9696969696969697, 0.8787878787878788, 0.8787878787878788, 0.8787878787878788, 0.8787878787878788, 0.8787878787878788, 1.2121212121212122, 0.42424242424242425, 1.0909090909090908, 0.3939393939393939, 0.6363636363636364];
pub const BETWEENNESS: [f64; 34] = [0.4376352813852815, 0.05393668831168831, 0.14365680615680615, 0.011909271284271283, 0.0006313131313131313, 0.02998737373737374, 0.029987373737373736, 0.0, 0.05592682780182782, 0.0006313131313131313, 0.0, 0.0, 0.045863395863395856, 0.0, 0.03247504810004811, 0.0, 0.13827561327561327, 0.014411976911976905, 0.0008477633477633478, 0.022333453583453587, 0.0017947330447330447, 0.14524711399711404, 0.0, 0.30407497594997596, 0.0, 0.0, 0.0, 0.0, 0.0, 0.017613636363636363, 0.0038404882154882162, 0.0029220779220779218, 0.0022095959595959595, 0.0];
pub const CF_CLOSENESS: [f64; 34] = [1.9912816055334528, 1.785850320737147, 1.89602410893343, 1.5921114585481142, 1.1129982971265255, 1.1596162344852265, 1.1596162344852265, 1.42911231144174, 1.601617030763449, 1.1129982971265258, 0.6928251522785972, 1.0275311219105354, 1.589765886973772, 1.0488828186707881, 1.3292607640275882, 1.0488828186707881, 1.6178084189757946, 1.4634712359158242, 1.0754109272852075, 1.403145993176576, 1.297787016206046, 1.873213686904496, 0.8145449462065696, 2.0122188357104878, 1.052147048175489, 1.052147048175489, 1.0521470481754889, 1.0521470481754889, 1.0521470481754889, 1.483164278696122, 1.147958359658978, 1.3489732174718856, 1.141950448510759, 0.9928726335153842];
pub const LAMBDA_MAX: f64 = 6.725697727631735;
pub const KATZ_S01: [f64; 34] = [3.9829935665387652, 2.6518104947276178, 3.1214080028221325, 2.0226482178559912, 0.8904518791826077, 1.0310733461047015, 1.0310733461047017, 1.5778860281944502, 2.1126642236983693, 0.8904518791826076, 0.4982993566538766, 0.8005641784394757, 2.0918199078374684, 0.8634804061266385, 1.3774142857696559, 0.8634804061266382, 2.005409706560715, 1.6169741260044348, 0.9260746799252308, 1.3556395136739334, 1.2266156505813026, 3.2659277451881867, 0.40621466922094046, 4.1393387964301755, 0.9405266541618365, 0.9405266541618365, 0.9405266541618365, 0.9405266541618365, 0.9405266541618363, 1.5865328350230858, 0.7301058044047744, 1.3743164905337848, 0.7091155024639422, 0.7513655286963961];
pub const KATZ_DEFAULT: [f64; 34] = [16.3877213179733, 11.781907548614049, 14.010528873686454, 9.251912059392366, 3.5990018954744185, 3.90860886447961, 3.9086088644796098, 7.417648672306078, 9.913489205395003, 3.599001895474418, 2.326739889288232, 3.6986006578069, 9.843108389728629, 4.037152289549841, 6.46261200697239, 4.037152289549841, 8.669326630418992, 7.5983294640418615, 4.434095331660121, 5.981321206424385, 5.72799736529216, 13.961445801738122, 1.3136920976635191, 17.12545434436793, 4.42752727485138, 4.42752727485138, 4.427527274851381, 4.42752727485138, 4.42752727485138, 6.820305773021989, 2.8411279083963046, 6.058778560592771, 2.7421092825724944, 3.3700309666526995];
pub const PAGERANK: [f64; 34] = [0.09699728637778933, 0.05287692434442585, 0.057078509464415596, 0.03585985802186739, 0.021977952751524976, 0.02911115525770075, 0.02911115525770075, 0.02449049718579463, 0.029766055982719385, 0.021977952751524976, 0.009564745563621722, 0.014644892128611264, 0.029536456239649806, 0.01455867731701772, 0.0196046363708729, 0.01455867731701772, 0.03715808680767129, 0.02459015512971213, 0.014309397063524895, 0.025639767257563804, 0.0195734593477806, 0.07169322527506004, 0.01678400577789076, 0.10091918139989796, 0.01453599386544098, 0.01453599386544098, 0.01453599386544098, 0.01453599386544098, 0.01453599386544098, 0.031522514410829046, 0.02100619718417697, 0.0262885373911691, 0.0210760333630544, 0.015044037932209257];

pub const PEARSON_CELLS: [[f64; 6]; 4] = [
    [0.7019079632070511, 0.7651680206611651, 0.5007305154538891, 0.8812070852935395, 0.767949520365998, 0.6806555867885076],
    [0.6405695572674202, 0.7537919834197897, 0.4575096447765297, 0.7951959419748451, 0.7538849087303928, 0.6106394968735672],
    [0.9118451431677838, 0.9499154451683839, 0.8320578674596679, 0.9580694266918813, 0.9726148880339018, 0.89209517331837],
    [0.951432373595184, 0.8209010742520517, 0.8252459853631414, 0.882919229635855, 0.9305378552431951, 0.9428557051915684],
];

// (hierarchy index, centrality index, value) for tie-exact cells only.
pub const SPEARMAN_SAFE: [(usize, usize, f64); 6] = [
    (0, 0, 0.9276979684138859),
    (0, 1, 0.7326542158623869),
    (1, 0, 0.797164492821816),
    (1, 1, 0.75976777260134),
    (3, 0, 0.9193133245956457),
    (3, 1, 0.7504097019919943),
];
pub const KENDALL_SAFE: [(usize, usize, f64); 6] = [
    (0, 0, 0.8615359270599827),
    (0, 1, 0.6018748629967624),
    (1, 0, 0.6939598397762893),
    (1, 1, 0.6231547153861218),
    (3, 0, 0.8500141949643851),
    (3, 1, 0.6131123492767565),
];
pub const JACCARD10_SAFE: [(usize, usize, f64); 6] = [
    (0, 0, 0.6666666666666666),
    (0, 1, 0.8181818181818182),
    (1, 0, 0.6666666666666666),
    (1, 1, 0.8181818181818182),
    (3, 0, 0.8181818181818182),
    (3, 1, 0.6666666666666666),
];
pub const RBO05_SAFE: [(usize, usize, f64); 6] = [
    (0, 0, 0.23707062251984126),
    (0, 1, 0.7700784350198412),
    (1, 0, 0.23707062251984126),
    (1, 1, 0.7700784350198412),
    (3, 0, 0.4818700396825396),
    (3, 1, 0.8013175843253968),
];
pub const RBO09_SAFE: [(usize, usize, f64); 6] = [
    (0, 0, 0.5908607875928571),
    (0, 1, 0.7336393364928571),
    (1, 0, 0.5908607875928571),
    (1, 1, 0.7336393364928571),
    (3, 0, 0.8187005453142857),
    (3, 1, 0.7599694678428572),
];
