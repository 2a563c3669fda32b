// Generated by tools/sbp_design/design_operators.py, do not edit.
#include "esbp/sbp1d.hpp"

namespace esbp::tables {

static const double H2[] = {0.5};
static const double D1_2[1][2] = {
    {-1.0, 1.0},
};
static const double D1int_2[] = {-0.5, 0.0, 0.5};
static const double S_2[] = {-1.5, 2.0, -0.5};
static const double D2_2[2][3][3] = {
    {
        {2.0, -1.0, 0.0},
        {-3.0, 1.0, 0.0},
        {1.0, 0.0, 0.0},
    },
    {
        {0.5, 0.5, 0.0},
        {-0.5, -1.0, -0.5},
        {0.0, 0.5, 0.5},
    },
};
static const double D2int_2[3][3] = {
    {0.5, 0.5, 0.0},
    {-0.5, -1.0, -0.5},
    {0.0, 0.5, 0.5},
};

static const double H4[] = {0.3541666666666667, 1.2291666666666667, 0.8958333333333334, 1.0208333333333333};
static const double D1_4[4][6] = {
    {-1.411764705882353, 1.7352941176470589, -0.23529411764705882, -0.08823529411764706, 0.0, 0.0},
    {-0.5, 0.0, 0.5, 0.0, 0.0, 0.0},
    {0.09302325581395349, -0.686046511627907, 0.0, 0.686046511627907, -0.09302325581395349, 0.0},
    {0.030612244897959183, 0.0, -0.6020408163265306, 0.0, 0.6530612244897959, -0.08163265306122448},
};
static const double D1int_4[] = {0.08333333333333333, -0.6666666666666666, 0.0, 0.6666666666666666, -0.08333333333333333};
static const double S_4[] = {-1.8333333333333333, 3.0, -1.5, 0.3333333333333333};
static const double D2_4[6][8][8] = {
    {
        {3.1263513773438603, -0.8678004656819368, -0.02204280740492539, -0.14320167746161547, 0.0, 0.0, 0.0, 0.0},
        {-5.7581563220779675, 0.0004773431741829942, 0.16190798921089242, 0.30868914104809425, 0.0, 0.0, 0.0, 0.0},
        {3.4049524757043237, 0.8671248716166923, -0.0005382671795183413, -0.0562759535161348, 0.0, 0.0, 0.0, 0.0},
        {-0.5764920916131828, 0.00023657115948704608, -0.16116976555989845, -0.11893726994753599, 0.0, 0.0, 0.0, 0.0},
        {-0.24924013641168513, -4.891910315782318e-05, 0.02183053048646809, -0.023810482323176316, 0.0, 0.0, 0.0, 0.0},
        {0.05258469705465121, 1.059883473229609e-05, 1.2320446981694608e-05, 0.0335362422003683, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    },
    {
        {0.7815481783843145, 0.00013753955866289662, 0.046651454518392727, 0.08894432877656953, 0.0, 0.0, 0.0, 0.0},
        {-1.216151126173836, -0.0004760221182307829, -0.34351174381846905, -0.19550503445264736, 0.0, 0.0, 0.0, 0.0},
        {0.7789808802934844, 0.0006166177274178908, 0.0006430717078708285, 0.0695201241445632, 0.0, 0.0, 0.0, 0.0},
        {-0.6055176676805823, -0.00036911605949794114, 0.3426267026032747, 0.07502654651649922, 0.0, 0.0, 0.0, 0.0},
        {0.33095630725448283, 0.0001047696163508585, -0.04639291764824921, -0.021314971538946247, 0.0, 0.0, 0.0, 0.0},
        {-0.06981657207786343, -1.3788724702921831e-05, -1.656736281996557e-05, -0.016670993446038333, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    },
    {
        {-0.32827460262852315, 0.34281680970892486, -0.00021280330353050703, -0.02224863278544864, 0.0, 0.0, 0.0, 0.0},
        {1.0688342311003622, 0.0008460568818059431, 0.0008823542038227647, 0.09538807731463321, 0.0, 0.0, 0.0, 0.0},
        {-1.7443542168519803, -0.3444139797019231, -0.0014696826351467344, -0.44786108082069565, -0.046511627906976744, 0.0, 0.0, 0.0},
        {1.6841986390762078, 0.0011602914233596478, 0.0012429557178086853, -0.03532866101308648, 0.18604651162790697, 0.0, 0.0, 0.0},
        {-0.8623217946692615, -0.0005004081848909852, -0.0005422638278156911, 0.4578849075290632, -0.13953488372093023, 0.0, 0.0, 0.0},
        {0.181917743973195, 9.122987272365868e-05, 9.943984486148247e-05, -0.04783461022446567, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    },
    {
        {0.1265231518893039, 8.207570839346497e-05, -0.05591604111261783, -0.041263950798124734, 0.0, 0.0, 0.0, 0.0},
        {-0.7290927019011093, -0.00044444586755874546, 0.41255051946108584, 0.09033808662190722, 0.0, 0.0, 0.0, 0.0},
        {1.4779702342913659, 0.0010182149225400991, 0.0010907570584851728, -0.031002702521688134, 0.16326530612244897, 0.0, 0.0, 0.0},
        {-1.462341112401297, -0.0012087266462024744, -0.4143129359994658, -0.03638090418513156, -0.8163265306122449, -0.04081632653061224, 0.0, 0.0},
        {0.743914325188455, 0.0007302134530523084, 0.056772544868752425, 0.010737323438322328, 0.4897959183673469, 0.16326530612244897, 0.0, 0.0},
        {-0.15697389706671847, -0.0001773315702246526, -0.00018484427623982678, 0.007572147444714885, 0.16326530612244897, -0.12244897959183673, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    },
    {
        {-0.08827254831247182, -1.7325515701729043e-05, 0.007731646213957448, -0.008432879156124945, 0.0, 0.0, 0.0, 0.0},
        {0.4068004610003018, 0.00012877932009793024, -0.057024627942639655, -0.02619965251662143, 0.0, 0.0, 0.0, 0.0},
        {-0.7724966077245468, -0.00044828233229817415, -0.0004857780124182232, 0.4101885629947858, -0.125, 0.0, 0.0, 0.0},
        {0.7594125402965479, 0.0007454262333242315, 0.05795530622018477, 0.010961017676620709, 0.5, 0.16666666666666666, 0.0, 0.0},
        {-0.3871743598583034, -0.0005744951716370162, -0.008346331035676835, -0.43885805182382165, -0.75, -0.8333333333333334, -0.041666666666666664, 0.0},
        {0.08173051459847236, 0.0001658974662147577, 0.000169784556592492, 0.05234100282516152, 0.5, 0.5, 0.16666666666666666, 0.0},
        {0.0, 0.0, 0.0, 0.0, -0.125, 0.16666666666666666, -0.125, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    },
    {
        {0.018623746873522303, 3.753753967688199e-06, 4.363491639350174e-06, 0.01187741911263044, 0.0, 0.0, 0.0, 0.0},
        {-0.08581620317904046, -1.694864078067475e-05, -2.0364050132874343e-05, -0.020491429444088785, 0.0, 0.0, 0.0, 0.0},
        {0.16296797897598717, 8.17267609816109e-05, 8.908152768841138e-05, -0.04285183832608382, 0.0, 0.0, 0.0, 0.0},
        {-0.16024418658894177, -0.0001810259779376662, -0.00018869519866148983, 0.007729900516479779, 0.16666666666666666, -0.125, 0.0, 0.0},
        {0.08173051459847236, 0.0001658974662147577, 0.000169784556592492, 0.05234100282516152, 0.5, 0.5, 0.16666666666666666, 0.0},
        {-0.0172618506799996, -5.3403362445715846e-05, -5.41703271258894e-05, -0.00860505468409913, -0.8333333333333334, -0.75, -0.8333333333333334, -0.041666666666666664},
        {0.0, 0.0, 0.0, 0.0, 0.16666666666666666, 0.5, 0.5, 0.16666666666666666},
        {0.0, 0.0, 0.0, 0.0, 0.0, -0.125, 0.16666666666666666, -0.125},
    },
};
static const double D2int_4[5][5] = {
    {-0.125, 0.16666666666666666, -0.125, 0.0, 0.0},
    {0.16666666666666666, 0.5, 0.5, 0.16666666666666666, 0.0},
    {-0.041666666666666664, -0.8333333333333334, -0.75, -0.8333333333333334, -0.041666666666666664},
    {0.0, 0.16666666666666666, 0.5, 0.5, 0.16666666666666666},
    {0.0, 0.0, -0.125, 0.16666666666666666, -0.125},
};

static const double H6[] = {0.3159490740740741, 1.3903935185185186, 0.6275462962962963, 1.2405092592592593, 0.9116898148148148, 1.0139120370370371};
static const double D1_6[6][9] = {
    {-1.5825335189391163, 2.029355019903778, -0.12541822355728136, -0.47454025935966004, 0.12058270447163406, 0.03255427748064571, 0.0, 0.0, 0.0},
    {-0.4611448708343739, 0.0, 0.2781153750104054, 0.2771025833125225, -0.0828269374843919, -0.011246150004162158, 0.0, 0.0, 0.0},
    {0.06314398131070946, -0.616193286610107, 0.0, 0.5657199065535473, 0.017613426779786057, -0.030284028033935817, 0.0, 0.0, 0.0},
    {0.12086210113827206, -0.31058344218448714, -0.28618523356347575, 0.0, 0.5100143061516452, -0.04754307395658394, 0.013435342414629596, 0.0, 0.0},
    {-0.04178832889001735, 0.12631712580931828, -0.012123905039989844, -0.6939613219922982, 0.0, 0.7678050019042783, -0.1645296432652025, 0.01828107147391139, 0.0},
    {-0.01014436504493809, 0.015422022328257345, 0.018743864295335724, 0.058168382761428584, -0.6903951964567019, 0.0, 0.7397091390607521, -0.1479418278121504, 0.016437980868016712},
};
static const double D1int_6[] = {-0.016666666666666666, 0.15, -0.75, 0.0, 0.75, -0.15, 0.016666666666666666};
static const double S_6[] = {-2.0833333333333335, 4.0, -3.0, 1.3333333333333333, -0.25};
static const double D2_6[9][12][12] = {
    {
        {3.9705049669242554, -0.9441530678380751, -0.012793842853241765, -0.06091550919697749, -0.008107271237303799, -0.08178634693375379, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-8.918971830128687, 0.03583067179161836, 0.09772725630271588, 0.16189232712352242, 0.027401015585551997, 0.21376702587189106, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {8.441833354835477, 0.512232565266343, -0.02756429178282746, 0.11780426451164262, -0.015485643619543967, -0.06075925110315832, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-4.507079676989497, 0.5815939940807446, -0.06599447389233744, -8.70819584717042e-05, -0.08628018753915184, -0.254248485918487, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {1.2159095598637775, -0.15592257443950872, 0.010479964631075638, -0.23129264221817944, 0.010918049584924028, 0.19608754903688513, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.3054570320054464, -0.008567183768084434, 0.01213670244857425, 0.03222519558270766, 0.10128914052698026, 0.011826365826670777, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.057480935063136354, -0.04515725939372593, -0.03012533236760682, -0.033786326489099405, -0.04474638770861177, -0.038606288835298666, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.07346583681546234, 0.031395826107453166, 0.020956991288044634, 0.01829550089611944, 0.018736311237542026, 0.018548537140576582, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.027686114378477917, -0.00725297180676495, -0.004822973774396914, -0.004135728251264098, -0.003725026830386931, -0.004829105085325779, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    },
    {
        {0.8501615498305761, 0.008142060089632882, 0.022207264151765074, 0.0367879525998328, 0.006226528955751256, 0.04857581180596755, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-1.4732939653063282, -0.03623942438350834, -0.1919066009102586, -0.10042058281641116, -0.02236675529868729, -0.12922149423643303, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.931074717404234, 0.05798250107568656, 0.03233381220073115, -0.0572989116995475, 0.018950592554553596, 0.04464123773930027, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.26923398057294023, -0.034780269624454685, 0.13872372586450557, -0.012110698814118628, 0.04783241932340837, 0.13935352759285466, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.2730803495203622, 0.005335743531304403, 0.00795716910967745, 0.14470781000540792, 0.0032132963643317345, -0.11202277783420725, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.3406007079051589, -0.020765810991051376, -0.02270756486651455, -0.027787867520501733, -0.07712168675146623, -0.015144140562452847, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.0638645744928462, 0.04139838143853065, 0.026735898594235006, 0.02751534760642086, 0.03475553222279019, 0.03605927008295882, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.06911974887497582, -0.027296472393475373, -0.017226563407266658, -0.014613492801396922, -0.014282848663679178, -0.016019956330352105, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.02675564362748369, 0.0062232912573352865, 0.003882859263125563, 0.0032204434403143565, 0.0027929212929975514, 0.003778521742363926, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    },
    {
        {-0.5303362795961113, 0.25789237489193345, -0.013877721082398082, 0.05931060148725231, -0.007796516037003157, -0.030590299458023162, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {2.062892028804327, 0.12846620904135422, 0.07163889449785749, -0.12695164630148728, 0.04198699158204581, 0.09890726465551718, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-3.207432338471532, -0.42657864339204943, -0.1573706527794819, -0.2772648726532244, -0.10123690067377758, -0.11169302755551666, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {1.891651738882661, 0.09939105276818079, 0.19711856585020876, 0.16152860892165313, 0.1411961218803817, 0.07113144696974318, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.6019063778569255, -0.13913049208719974, -0.16619909872642655, 0.1357125548067987, -0.1524650390117738, -0.06464097383408807, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-1.214389026820159, 0.1446742759925506, 0.11081486518253716, 0.07760248055056722, 0.11337229404033056, 0.08793320151766518, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.2817998655352149, -0.10799127613239919, -0.06171646414677228, -0.043847618713453614, -0.04380572466362684, -0.056686920769521684, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.19757922820612137, 0.05478911333249821, 0.023965322251669065, 0.016440573517936725, 0.009645278336032764, 0.005294633916285041, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.0836715943974479, -0.01151261441486887, -0.004373711047193677, -0.0025306816160427974, -0.0008965054526094487, 0.0003446745579390007, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    },
    {
        {-0.07309443014050483, 0.1481279422505707, -0.016808333162092064, -2.217916871021255e-05, -0.02197496323422063, -0.0647553197294538, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.3017641172441436, -0.038982588076000566, 0.15548498962589152, -0.013573971342975095, 0.05361176090055092, 0.15619088700997974, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.9569449270593197, 0.05027974324585522, 0.09971793842506363, 0.08171376353547335, 0.07142800642241366, 0.03598383144895946, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.8011538140594865, -0.34440124057672056, -0.3813185687047717, -0.1947341142017356, -0.5467611794879388, -0.4144373051139207, -0.004478447471543199, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.08323809956557095, 0.29169178649043176, 0.23957277788588285, 0.22572853467857562, 0.22565835568003847, 0.43909048711168847, 0.020153013621944393, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.2537415981948624, -0.12038573619354354, -0.11055429220993393, -0.11351723695451324, 0.28054255998423816, -0.0848863645328775, -0.040306027243888785, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.1260644097488339, -0.009332912503383656, -0.008889849019760481, -0.006510393296295313, -0.09498419537391209, -0.12327023956009184, 0.02463146109348759, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.0017067047129175172, 0.031821651746067846, 0.03169364757823957, 0.029241581288173116, 0.04144822039843123, 0.0733705838702651, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.00985885108613322, -0.008818646383277229, -0.008898310418519427, -0.008325984537992631, -0.008968565289600935, -0.017286560504548937, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    },
    {
        {0.14716134524770091, -0.05403547590516324, 0.003631865868974264, -0.08015521832260838, 0.003783685636273405, 0.06795477864172769, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.41646746715603794, 0.008137398380291962, 0.012135263744389387, 0.22068997354258796, 0.004900511517673877, -0.17084291356129638, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.41431209606960134, -0.09576812594855871, -0.11440034445787542, 0.0934154465104053, -0.10494673626023074, -0.0444945233119748, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.11325961040291854, 0.3968963523682173, 0.3259795649842443, 0.3071421143436554, 0.3070466238642443, 0.5974573874397711, 0.02742160721086708, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.6359356176721025, -0.43744703307785526, -0.4196714790984533, -0.7529707044062443, -0.39779919191419966, -1.1273065807585678, -0.1371080360543354, -0.006093690491303796, 0.0, 0.0, 0.0, 0.0},
        {0.4770797981810309, 0.1847094247131696, 0.22830659815256607, 0.2727262516621445, 0.23626095546907408, 0.19093478209350181, 0.329059286530405, 0.02742160721086708, 0.0, 0.0, 0.0, 0.0},
        {-0.024191623567381786, 0.05915893147170149, -0.0005327080848023632, -0.04032475203757134, -0.02710684934781297, 0.6493339916109651, -0.19195125047606956, -0.05484321442173416, 0.0, 0.0, 0.0, 0.0},
        {-0.11151446815144438, -0.0835261181512809, -0.05054208819077914, -0.0314764302919727, -0.03349816752853914, -0.19810863990419633, -0.02742160721086708, 0.033515297702170876, 0.0, 0.0, 0.0, 0.0},
        {0.03629632664571485, 0.021874646149477796, 0.01509332708173623, 0.010953318999603603, 0.011359168563516833, 0.035071717750069634, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    },
    {
        {-0.09518465399973373, -0.002669653461121537, 0.003781965062911576, 0.010041818554562152, 0.03156310310387328, 0.0036852598609216558, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.46707110614651187, -0.028476483120876257, -0.03113924074124327, -0.038105939650212015, -0.10575818165628226, -0.020767398070448854, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.7516286504210979, 0.0895440657098707, 0.06858726958513693, 0.04803094102248527, 0.07017015345387917, 0.054424992423549756, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.3104498127271678, -0.14729050940873492, -0.13526185519806302, -0.13888698268058638, 0.3432404691572184, -0.10385745246265851, -0.049313942604050136, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.4289807961315929, 0.1660870914437612, 0.2052888145987264, 0.24523009569903792, 0.21244121666513283, 0.1716848106836047, 0.2958836556243008, 0.024656971302025068, 0.0, 0.0, 0.0, 0.0},
        {-0.5581501784254242, -0.11117314768555714, -0.19337304200568814, -0.23695565936924376, -0.7598575251782819, -0.2161801863247317, -0.9369649094769525, -0.12328485651012534, -0.00547932695600557, 0.0, 0.0, 0.0},
        {0.20325720828433674, 0.039254300149524635, 0.11713352680852057, 0.165188206082372, 0.27350639763560936, 0.1735594165195252, 0.41916851213442613, 0.2958836556243008, 0.024656971302025068, 0.0, 0.0, 0.0},
        {0.011659627089200762, -0.004878783026123494, -0.04154242712531414, -0.06594190323158582, -0.07623070968657986, -0.07669050142151135, 0.2958836556243008, -0.17259879911417547, -0.049313942604050136, 0.0, 0.0, 0.0},
        {-0.01645506753255426, -0.00039688060074318687, 0.006524989015013109, 0.011399423573170617, 0.010925076505431, 0.014141058791749112, -0.024656971302025068, -0.024656971302025068, 0.030136298258030637, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    },
    {
        {0.01816104821010991, -0.01426739429317049, -0.009518070867719108, -0.01067475857059532, -0.014137579764695417, -0.012197621210948879, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.08879689043779646, 0.05756004122929035, 0.03717342011719272, 0.0382571609717516, 0.048323866735229, 0.050136575405854665, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.17684246191341843, -0.06776952536919773, -0.03872993849581011, -0.027516410725039988, -0.027490120269234343, -0.035573667177354926, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.15638406755648168, -0.011577564376303938, -0.011027940022429726, -0.008076203165473746, -0.11782877384462845, -0.15291787356540096, 0.030555555555555555, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.02205525681021601, 0.053934595278077854, -0.0004856645351838211, -0.03676366571758674, -0.024713038462120692, 0.5919911865647652, -0.175, -0.05, 0.0, 0.0, 0.0, 0.0},
        {0.2060849300940332, 0.039800407427067794, 0.11876309277175949, 0.16748631052347168, 0.27731142876938253, 0.17597398155027136, 0.425, 0.3, 0.025, 0.0, 0.0, 0.0},
        {-0.21849415324661509, -0.11996409525498877, -0.1762826516076388, -0.21787588516467193, -0.236965481078961, -0.8534200103414511, -0.5611111111111111, -0.95, -0.125, -0.005555555555555556, 0.0, 0.0},
        {0.10410995713758836, 0.0805124269535003, 0.10166864024914751, 0.12009159023605248, 0.11976699150776596, 0.28560964251077003, 0.425, 0.425, 0.3, 0.025, 0.0, 0.0},
        {-0.019468029304040662, -0.01822889159427537, -0.02156088760931816, -0.024928138387908035, -0.02426729359273753, -0.049602213736505404, -0.175, 0.3, -0.175, -0.05, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.030555555555555555, -0.025, -0.025, 0.030555555555555555, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    },
    {
        {0.02321146311792235, 0.009919482188440468, 0.006621341992836139, 0.005780446567850329, 0.005919720187065072, 0.005860393134993745, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.09610365083739404, -0.03795283829430783, -0.023951702107811848, -0.020318505673979307, -0.019858780207960416, -0.022274043448671278, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.12399011288583217, 0.03438270514916728, 0.015039349218582137, 0.010317221020168164, 0.006052858696524265, 0.0033226279044094318, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.002117182999195596, 0.039475053635920736, 0.03931626328050599, 0.03627445234336105, 0.05141690118407245, 0.0910168886483219, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.10166660481816288, -0.07614991118954162, -0.046078707023005476, -0.02869674090392002, -0.030539938150729487, -0.18061362922747157, -0.025, 0.030555555555555555, 0.0, 0.0, 0.0, 0.0},
        {0.011821836253103764, -0.004946656836278592, -0.042120366910089926, -0.06685928943163635, -0.07729123414309917, -0.07775742251767637, 0.3, -0.175, -0.05, 0.0, 0.0, 0.0},
        {0.10410995713758836, 0.0805124269535003, 0.10166864024914751, 0.12009159023605248, 0.11976699150776596, 0.28560964251077003, 0.425, 0.425, 0.3, 0.025, 0.0, 0.0},
        {-0.08333991516247208, -0.05894272716197463, -0.06478758457803234, -0.07210796922427753, -0.07058181945695531, -0.13147755216594176, -0.95, -0.5611111111111111, -0.95, -0.125, -0.005555555555555556, 0.0},
        {0.020093984422777947, 0.013702465555073887, 0.0142927658778678, 0.015518795066381187, 0.01511530038331664, 0.026313095161265874, 0.3, 0.425, 0.425, 0.3, 0.025, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.05, -0.175, 0.3, -0.175, -0.05, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.030555555555555555, -0.025, -0.025, 0.030555555555555555, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    },
    {
        {-0.008747402202589006, -0.0022915697266327503, -0.0015238140983042472, -0.0013066795116088814, -0.0011769187779618337, -0.0015257512803150822, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.03720087348344463, 0.008652823828051943, 0.005398702352769374, 0.004477683686168561, 0.0038832596635161557, 0.005253632140164103, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.05250779916932436, -0.007224698536738312, -0.0027447061687365876, -0.0015881198752527833, -0.0005625986763944943, 0.00021629924226218306, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.012229996058006466, -0.010939612492588582, -0.011038436465936484, -0.010328460911829283, -0.01112558828402116, -0.021444138366638367, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.033090991318089805, 0.019942892097157012, 0.013760432572087533, 0.009986029370356203, 0.010356038284122928, 0.031974527860798435, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-0.016683991041514103, -0.0004024020183600076, 0.006615764903856231, 0.011558012776121441, 0.011077066574407018, 0.014337789725402846, -0.025, -0.025, 0.030555555555555555, 0.0, 0.0, 0.0},
        {-0.019468029304040662, -0.01822889159427537, -0.02156088760931816, -0.024928138387908035, -0.02426729359273753, -0.049602213736505404, -0.175, 0.3, -0.175, -0.05, 0.0, 0.0},
        {0.020093984422777947, 0.013702465555073887, 0.0142927658778678, 0.015518795066381187, 0.01511530038331664, 0.026313095161265874, 0.3, 0.425, 0.425, 0.3, 0.025, 0.0},
        {-0.005208623564850705, -0.0032110071116878214, -0.0031998213642854606, -0.003389122212428407, -0.003299265574247724, -0.005523240746434588, -0.125, -0.95, -0.5611111111111111, -0.95, -0.125, -0.005555555555555556},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.025, 0.3, 0.425, 0.425, 0.3, 0.025},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.05, -0.175, 0.3, -0.175, -0.05},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.030555555555555555, -0.025, -0.025, 0.030555555555555555},
    },
};
static const double D2int_6[7][7] = {
    {0.030555555555555555, -0.025, -0.025, 0.030555555555555555, 0.0, 0.0, 0.0},
    {-0.05, -0.175, 0.3, -0.175, -0.05, 0.0, 0.0},
    {0.025, 0.3, 0.425, 0.425, 0.3, 0.025, 0.0},
    {-0.005555555555555556, -0.125, -0.95, -0.5611111111111111, -0.95, -0.125, -0.005555555555555556},
    {0.0, 0.025, 0.3, 0.425, 0.425, 0.3, 0.025},
    {0.0, 0.0, -0.05, -0.175, 0.3, -0.175, -0.05},
    {0.0, 0.0, 0.0, 0.030555555555555555, -0.025, -0.025, 0.030555555555555555},
};

const Family& family(int order)
{
    static const Family f2 = make_family(2, 1, H2, &D1_2[0][0], 2, D1int_2, S_2, 3, &D2_2[0][0][0], 2, 3, &D2int_2[0][0]);
    static const Family f4 = make_family(4, 4, H4, &D1_4[0][0], 6, D1int_4, S_4, 4, &D2_4[0][0][0], 6, 8, &D2int_4[0][0]);
    static const Family f6 = make_family(6, 6, H6, &D1_6[0][0], 9, D1int_6, S_6, 5, &D2_6[0][0][0], 9, 12, &D2int_6[0][0]);
    switch (order) {
    case 2: return f2;
    case 4: return f4;
    case 6: return f6;
    }
    throw std::invalid_argument("unsupported order");
}

}
