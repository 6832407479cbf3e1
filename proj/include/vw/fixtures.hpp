#pragma once

// Reference expansions of the normalized universal series (leading term 1):
// Abar, Bbar and the Cbar_ij for ranks 2..6, stored as exact rational
// coefficient lists for q^0, q^1, ..., q^(valid_order - 1).  Mirror-symmetric
// entries (C_ij = C_{r-j,r-i}) are stored once.  No rank-7 table exists:
// the rank-7 relation checker accepts externally supplied data instead.

#include <vector>
#include <string>

namespace vw {

struct FixtureRow {
    int rank;
    const char* name;        // "A", "B", "C11", "C12", ...
    int valid_order;         // coefficients known for q^k, k < valid_order
    const char* coeffs;      // space-separated exact rationals
};

inline const std::vector<FixtureRow>& fixture_rows() {
    static const std::vector<FixtureRow> rows = {
        {2, "A", 15,
         "1 0 12 0 90 0 520 0 2535 0 10908 0 42614 0 153960"},
        {2, "B", 15,
         "1 -4 7 -12 23 -36 56 -88 128 -188 273 -384 536 -740 1009"},
        {2, "C11", 15,
         "1 2 -1 -2 3 2 -4 -4 5 8 -8 -10 11 12 -15"},
        {3, "A", 11,
         "1 0 0 12 0 0 90 0 0 520 0"},
        {3, "B", 11,
         "1 -9/4 -135/8 5687/64 -21357/128 91395/512 -976831/1024 127326087/16384 -1460793393/32768 29764293777/131072 -305367716529/262144"},
        {3, "C11", 11,
         "1 -7/4 239/16 -2361/32 100203/256 -1106023/512 24745059/2048 -280615001/4096 25731005619/65536 -297290563675/131072 6913461089017/524288"},
        {3, "C12", 11,
         "1 5 -7 3 15 -32 9 58 -96 22 149"},
        {4, "A", 13,
         "1 0 0 0 12 0 0 0 90 0 0 0 520"},
        {4, "B", 13,
         "1 -16/9 -644/81 -18560/729 1384039/6561 -169424/6561 -221992196/177147 786352768/1594323 260413701079/43046721 -3655109767904/387420489 68835523340380/3486784401 -2818123363388416/31381059609 -24806213541619144/282429536481"},
        {4, "C11", 13,
         "1 -11/9 -20/9 29737/729 -1005253/6561 2696689/19683 289688671/177147 -16079563135/1594323 115191654533/4782969 15075699699385/387420489 -1982510147928208/3486784401 2532736814456179/1162261467 -474057101483673346/282429536481"},
        {4, "C22", 13,
         "1 -32/9 1058/81 -15808/729 -83617/6561 4834592/19683 -150128758/177147 1226683328/1594323 283859838659/43046721 -14627747102272/387420489 285981994115234/3486784401 4003447693683712/31381059609 -471239600612088452/282429536481"},
        {4, "C12", 13,
         "1 32/9 290/81 -8768/729 15199/6561 2519200/59049 -22602614/177147 399387712/1594323 2430989377/14348907 -1587952009664/387420489 57170732310946/3486784401 -636801299852288/31381059609 -34921739613648004/282429536481"},
        {4, "C13", 13,
         "1 2/9 29/3 -50 1595/9 -1642/3 1564 -37316/9 30863/3 -24248 493144/9 -357934/3 251467"},
        {5, "A", 13,
         "1 0 0 0 0 12 0 0 0 0 90 0 0"},
        {5, "B", 13,
         "1 -25/16 -6425/1152 -328325/36864 -107959975/2654208 19714416547/42467328 -682323694025/3057647616 -157438303448125/195689447424 -42125816659848475/14089640214528 -1222748753871559175/225434243432448 91589140507399236041/1803473947459584 -1482872905939874912425/57711166318706688 -999082311255603435795425/12465611924840644608"},
        {5, "C11", 13,
         "1 -53/48 -455/768 -214105/55296 137066833/1769472 -32262250883/127401984 504641046613/2038431744 -35290739977297/146767085568 55324953373355585/9393093476352 -21106479712125095327/676302730297344 747314378419516014391/10820843684757504 -21332084310732182836789/259700248434180096 3766630856661994639083391/8310407949893763072"},
        {5, "C22", 13,
         "1 -45/16 1223/1152 92759/4096 -4997165/98304 -342060809/4718592 1507052138695/3057647616 -2357002948433/21743271936 -64722230546795459/14089640214528 106028028804927959/8349416423424 -4606809888515467877/5410421842378752 -2800069757219943079717/57711166318706688 -638603945799703782159017/12465611924840644608"},
        {5, "C12", 13,
         "1 155/48 3631/2304 205649/55296 -28529015/1769472 -440005171/42467328 576927703355/6115295232 -6282551916719/146767085568 -17020188466524013/28179280429056 1064059615856431819/676302730297344 1284173036440886659/1202315964973056 -990167550880548509473/86566749478060032 97471092940503634774661/24931223849681289216"},
        {5, "C13", 13,
         "1 7/48 15395/2304 -89765/6144 114167459/5308416 -780769727/14155776 1132411382279/6115295232 -9159845550413/16307453952 49255281600761635/28179280429056 -454493672610745723/75144747810816 705748856184446680013/32462531054272512 -6408400678095411411923/86566749478060032 5938469859966951248118893/24931223849681289216"},
        {5, "C14", 13,
         "1 1/12 7/36 1777/108 -26873/324 147607/972 397291/2916 -11472803/8748 52508239/26244 97770619/19683 -6130025513/236196 7730522729/354294 309256092337/2125764"},
        {5, "C23", 13,
         "1 9/4 1241/144 -487/64 3809/256 -928975/9216 1403185/4096 -53708245/49152 768441731/196608 -3604410743/262144 149919390323/3145728 -6272767971295/37748736 9726080833057/16777216"},
        {6, "B", 13,
         "1 -36/25 -11313/2500 -3247/625 -34009767/3125000 -535278969/19531250 11160367012447/15625000000 -21302896097079/97656250000 -6490052686485657/3906250000000 -190875372924966819/122070312500000 -504384643419560112357/48828125000000000 58192460624892069837/305175781250000000 7047741381268881396864257/61035156250000000000"},
        {6, "C12", 13,
         "1 153/50 3581/2500 8397/62500 7193779/1250000 -3241790199/156250000 -102108875889/7812500000 12405919349061/195312500000 3448498889721291/39062500000000 -19531005126126831/195312500000000 -66042687542312025919/48828125000000000 2951463228003450701163/1220703125000000000 559872718083081904996467/122070312500000000000"},
        {6, "C13", 13,
         "1 4/25 3314/625 -172232/15625 2536099/78125 -1034184364/9765625 64069351198/244140625 -3635150349352/6103515625 212172623155011/152587890625 -2261465069702616/762939453125 491082667968865538/95367431640625 -17291909688546080576/2384185791015625 501515259998762305004/59604644775390625"},
        {6, "C14", 13,
         "1 3/50 631/2500 322411/31250 -29736041/1250000 -814910581/39062500 1423477353961/7812500000 -16396918690441/48828125000 911147429724691/39062500000000 65177840656010451/48828125000000 -176306770973531492669/48828125000000000 1556960276432628476897/305175781250000000 -421247128876022098732433/122070312500000000000"},
        {6, "C15", 13,
         "1 1/25 2/25 4/25 633/25 -3084/25 1094/5 -4214/25 16812/25 -77554/25 105088/25 66776/25 131021/25"},
        {6, "C23", 13,
         "1 2 23/4 9/2 -41/16 -117/8 -261/32 369/16 6907/256 -3501/128 -3955/512 36747/256 -366245/2048"},
        {6, "C24", 13,
         "1 0 5 0 -7 0 3 0 15 0 -32 0 9"},
        {6, "C11", 13,
         "1 -53/50 -157/625 -24081/25000 -2038307/312500 20444533391/156250000 -798055683019/1953125000 357224942196863/781250000000 -603755861602199/1953125000000 -68925721325792843/195312500000000 188992627956724605259/12207031250000000 -189746787078769839054801/2441406250000000000 5219449160317229208749741/30517578125000000000"},
        {6, "C22", 13,
         "1 -64/25 4753/2500 -15344/3125 303612399/6250000 -845183548/9765625 -1002785046361/7812500000 2179824211714/6103515625 4917734779766831/7812500000000 -334521933275627/15258789062500 -574376093998872789063/48828125000000000 329111129334047147343/19073486328125000 5559702626773334250377891/122070312500000000000"},
        {6, "C33", 13,
         "1 -54/25 -16767/2500 250307/6250 -120287943/3125000 -6205359537/39062500 7524919810133/15625000000 -64798911249597/195312500000 -187818683722317/3906250000000 -265170942707217527/244140625000000 -110533664528530907643/48828125000000000 19598441858441582371011/610351562500000000 -5197545465184890169272087/61035156250000000000"},
    };
    return rows;
}

}  // namespace vw
