//! Reference values transcribed from published tables.
//!
//! Every entry is an exact rational; the π-power it multiplies is implied by
//! the table it belongs to and documented on each constant.

/// How a volume table entry was obtained by its authors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Computed by recursion.
    Computed,
    /// Computed, and also used to fit the conjectural polynomials.
    Fitted,
    /// Predicted by the conjectural formula only.
    Extrapolated,
}

/// `(g, n, MV_{g,n} / π^{6g-6+2n})`.
pub const MV_VOLUMES: &[(u32, u32, &str, Provenance)] = &[
    (0, 3, "4", Provenance::Fitted),
    (0, 4, "2", Provenance::Fitted),
    (0, 5, "1", Provenance::Fitted),
    (0, 6, "1/2", Provenance::Fitted),
    (0, 7, "1/4", Provenance::Fitted),
    (0, 8, "1/8", Provenance::Fitted),
    (0, 9, "1/16", Provenance::Fitted),
    (0, 10, "1/32", Provenance::Fitted),
    (0, 11, "1/64", Provenance::Fitted),
    (1, 1, "2/3", Provenance::Fitted),
    (1, 2, "1/3", Provenance::Fitted),
    (1, 3, "11/60", Provenance::Computed),
    (1, 4, "1/10", Provenance::Computed),
    (1, 5, "163/3024", Provenance::Computed),
    (1, 6, "29/1008", Provenance::Computed),
    (1, 7, "1255/82368", Provenance::Computed),
    (1, 8, "2477/308880", Provenance::Computed),
    (1, 9, "39203/9335040", Provenance::Computed),
    (1, 10, "1363/622336", Provenance::Computed),
    (1, 11, "308333/270885888", Provenance::Computed),
    (2, 0, "1/15", Provenance::Computed),
    (2, 1, "29/840", Provenance::Fitted),
    (2, 2, "337/18144", Provenance::Fitted),
    (2, 3, "29/2880", Provenance::Fitted),
    (2, 4, "919/168480", Provenance::Computed),
    (2, 5, "653/221760", Provenance::Computed),
    (2, 6, "88663/56010240", Provenance::Computed),
    (2, 7, "295133/348281856", Provenance::Computed),
    (2, 8, "1835863/4063288320", Provenance::Computed),
    (2, 9, "12653167/52718561280", Provenance::Computed),
    (2, 10, "5219989/41079398400", Provenance::Computed),
    (2, 11, "644710519/9612579225600", Provenance::Computed),
    (3, 0, "115/33264", Provenance::Computed),
    (3, 1, "4111/2223936", Provenance::Fitted),
    (3, 2, "77633/77837760", Provenance::Fitted),
    (3, 3, "207719/384943104", Provenance::Fitted),
    (3, 4, "16011391/54854392320", Provenance::Fitted),
    (3, 5, "6208093/39382640640", Provenance::Computed),
    (3, 6, "5757089/67781007360", Provenance::Computed),
    (3, 7, "2598992519/56936046182400", Provenance::Computed),
    (3, 8, "1769539/720943441920", Provenance::Computed),
    (3, 9, "6756335603/516534771916800", Provenance::Computed),
    (3, 10, "2863703603/410578921267200", Provenance::Computed),
    (3, 11, "28221517763/7606514751897600", Provenance::Computed),
    (4, 0, "2106241/11548293120", Provenance::Computed),
    (4, 1, "58091/592220160", Provenance::Fitted),
    (4, 2, "160909109/3038089420800", Provenance::Fitted),
    (4, 3, "14674841399/512424415641600", Provenance::Fitted),
    (4, 4, "9016171639/582300472320000", Provenance::Fitted),
    (4, 5, "442442475179/52900285261824000", Provenance::Fitted),
    (4, 6, "1537940628689/340912949465088000", Provenance::Computed),
    (4, 7, "643391778377/264869710110720000", Provenance::Computed),
    (4, 8, "127802659622551/97895844856922112000", Provenance::Computed),
    (4, 9, "76170641989903/108773160952135680000", Provenance::Computed),
    (4, 10, "364975959330977/973541287193739264000", Provenance::Computed),
    (
        4,
        11,
        "26274127922961227/131162562511011053568000",
        Provenance::Extrapolated,
    ),
    (5, 0, "7607231/790778419200", Provenance::Computed),
    (5, 1, "35161328707/6782087854080000", Provenance::Fitted),
    (5, 2, "27431847097/9796349122560000", Provenance::Fitted),
    (5, 3, "5703709895459/3767985230929920000", Provenance::Fitted),
    (5, 4, "143368101519407/175211313238241280000", Provenance::Fitted),
    (5, 5, "259645860580231/587375069141532672000", Provenance::Fitted),
    (5, 6, "229686916047007/962777317187911680000", Provenance::Fitted),
    (5, 7, "11267167909498433/87618715847436533760000", Provenance::Computed),
    (5, 8, "2762333771707/39907473380632166400", Provenance::Computed),
    (
        5,
        9,
        "46331482996262911/1245354014578231266508800",
        Provenance::Computed,
    ),
    (
        5,
        10,
        "110488317513510709/5533939090421837306265600",
        Provenance::Extrapolated,
    ),
    (
        5,
        11,
        "39074093749702556551/3652399799678412622135296000",
        Provenance::Extrapolated,
    ),
    (6, 0, "51582017261473/101735601235107840000", Provenance::Computed),
    (6, 1, "1725192578138153/6307607276576686080000", Provenance::Fitted),
    (6, 2, "236687293214441/1601932006749634560000", Provenance::Fitted),
    (6, 3, "37679857842043/471817281090355200000", Provenance::Fitted),
    (6, 4, "13237209152580169/306665505466027868160000", Provenance::Fitted),
    (
        6,
        5,
        "6359219722433607397/272686967460391980367872000",
        Provenance::Fitted,
    ),
    (
        6,
        6,
        "43310941179948284069/3440050974115714213871616000",
        Provenance::Fitted,
    ),
    (
        6,
        7,
        "74408487930504838727/10957199399035237866405888000",
        Provenance::Fitted,
    ),
    (
        6,
        8,
        "76034947449385560773/20780895411963382160424960000",
        Provenance::Computed,
    ),
    (
        6,
        9,
        "7583038108310022233611/3850996789771271334071894016000",
        Provenance::Extrapolated,
    ),
    (
        6,
        10,
        "1597788327762805352162251/1509590741590338362956182454272000",
        Provenance::Extrapolated,
    ),
    (
        6,
        11,
        "32893791972666409219189/57890914971883041214200545280000",
        Provenance::Extrapolated,
    ),
];

/// `(g, n, π²·SV_{g,n})`; entries marked `Extrapolated` rest on conjectural volumes.
pub const SV_CONSTANTS: &[(u32, u32, &str, Provenance)] = &[
    (0, 4, "3/2", Provenance::Computed),
    (0, 5, "5/3", Provenance::Computed),
    (0, 6, "11/6", Provenance::Computed),
    (0, 7, "2", Provenance::Computed),
    (0, 8, "13/6", Provenance::Computed),
    (0, 9, "7/3", Provenance::Computed),
    (0, 10, "5/2", Provenance::Computed),
    (0, 11, "8/3", Provenance::Computed),
    (1, 2, "7/3", Provenance::Computed),
    (1, 3, "47/22", Provenance::Computed),
    (1, 4, "44/21", Provenance::Computed),
    (1, 5, "2075/978", Provenance::Computed),
    (1, 6, "697/319", Provenance::Computed),
    (1, 7, "17101/7530", Provenance::Computed),
    (1, 8, "17630/7431", Provenance::Computed),
    (1, 9, "194829/78406", Provenance::Computed),
    (1, 10, "202415/77691", Provenance::Computed),
    (1, 11, "5054467/1849998", Provenance::Computed),
    (2, 0, "19/6", Provenance::Computed),
    (2, 1, "230/87", Provenance::Computed),
    (2, 2, "8131/3370", Provenance::Computed),
    (2, 3, "11041/4785", Provenance::Computed),
    (2, 4, "688823/303270", Provenance::Computed),
    (2, 5, "96716/42445", Provenance::Computed),
    (2, 6, "8622217/3723846", Provenance::Computed),
    (2, 7, "10506949/4426995", Provenance::Computed),
    (2, 8, "44927707/18358630", Provenance::Computed),
    (2, 9, "480821458/189797505", Provenance::Computed),
    (2, 10, "905804827/344519274", Provenance::Computed),
    (2, 11, "1761936475/644710519", Provenance::Extrapolated),
    (3, 0, "24199/8625", Provenance::Computed),
    (3, 1, "529239/205550", Provenance::Computed),
    (3, 2, "2843354/1164495", Provenance::Computed),
    (3, 3, "73870699/31157850", Provenance::Computed),
    (3, 4, "187549387/80056955", Provenance::Computed),
    (3, 5, "87365995/37248558", Provenance::Computed),
    (3, 6, "1433623484/604494345", Provenance::Computed),
    (3, 7, "12557689333/5197985038", Provenance::Computed),
    (3, 8, "3273823127/1322965425", Provenance::Computed),
    (3, 9, "515867741141/202690068090", Provenance::Computed),
    (3, 10, "488680850166/186140734195", Provenance::Extrapolated),
    (3, 11, "2297552653219/846645532890", Provenance::Extrapolated),
    (4, 0, "283794163/105312050", Provenance::Computed),
    (4, 1, "14053063/5518645", Provenance::Computed),
    (4, 2, "11842209371/4827273270", Provenance::Computed),
    (4, 3, "35221419482/14674841399", Provenance::Computed),
    (4, 4, "1414826039249/595067328174", Provenance::Computed),
    (4, 5, "15788133716389/6636637127685", Provenance::Computed),
    (4, 6, "7380284015613/3075881257378", Provenance::Computed),
    (4, 7, "32906433038620/13511227345917", Provenance::Computed),
    (4, 8, "1905176709014543/766815957735306", Provenance::Computed),
    (4, 9, "3294839869674121/1294900913828351", Provenance::Extrapolated),
    (4, 10, "658216299971112017/251833411938374130", Provenance::Extrapolated),
    (4, 11, "212103557000574050/78822383768883681", Provenance::Extrapolated),
    (5, 0, "180693680/68465079", Provenance::Computed),
    (5, 1, "533759417507/210967972242", Provenance::Computed),
    (5, 2, "606925117339/246886623873", Provenance::Computed),
    (5, 3, "82681229028041/34222259372754", Provenance::Computed),
    (5, 4, "1031120131654286/430104304558221", Provenance::Computed),
    (5, 5, "1245335246460801/519291721160462", Provenance::Computed),
    (5, 6, "18305424406953487/7579668229551231", Provenance::Computed),
    (5, 7, "165332043184123111/67603007456990598", Provenance::Computed),
    (5, 8, "931701551880070892/374503401099176525", Provenance::Extrapolated),
    (
        5,
        9,
        "13416096198217292533/5281789061573971854",
        Provenance::Extrapolated,
    ),
    (
        5,
        10,
        "2586449275763662283/994394857621596381",
        Provenance::Extrapolated,
    ),
    (
        5,
        11,
        "208627514502680586639/78148187499405113102",
        Provenance::Extrapolated,
    ),
    (6, 0, "806379495590975/309492103568838", Provenance::Computed),
    (6, 1, "4346055982466800/1725192578138153", Provenance::Computed),
    (6, 2, "122318875814791931/49704331575032610", Provenance::Computed),
    (6, 3, "5057811587495459887/2085014933689449405", Provenance::Computed),
    (6, 4, "1339844245835171101/555962784408367098", Provenance::Computed),
    (
        6,
        5,
        "321899861240823487478/133543614171105755337",
        Provenance::Computed,
    ),
    (
        6,
        6,
        "3150765025310943712637/1299328235398448522070",
        Provenance::Computed,
    ),
    (
        6,
        7,
        "1276869600669686371105/520859415513533871089",
        Provenance::Extrapolated,
    ),
    (
        6,
        8,
        "32923598627691820002839/13230080856193087574502",
        Provenance::Extrapolated,
    ),
    (
        6,
        9,
        "403660475951758341605956/159243800274510466905831",
        Provenance::Extrapolated,
    ),
    (
        6,
        10,
        "57921215793035879725637191/22369036588679274930271514",
        Provenance::Extrapolated,
    ),
    (
        6,
        11,
        "9156519282251402538004459/3453848157129972968014845",
        Provenance::Extrapolated,
    ),
];

/// `(n, d, H_n[d] / π^{2(n-3-d)})` in genus zero.
pub const GENUS0_ROW: &[(u32, u32, &str)] = &[
    (3, 0, "1"),
    (4, 0, "1/2"),
    (4, 1, "3"),
    (5, 0, "3/4"),
    (5, 1, "3"),
    (5, 2, "15"),
    (6, 0, "15/8"),
    (6, 1, "27/4"),
    (6, 2, "25"),
    (6, 3, "105"),
    (7, 0, "105/16"),
    (7, 1, "45/2"),
    (7, 2, "305/4"),
    (7, 3, "525/2"),
    (7, 4, "945"),
    (8, 0, "945/32"),
    (8, 1, "1575/16"),
    (8, 2, "1275/4"),
    (8, 3, "1029"),
    (8, 4, "6615/2"),
    (8, 5, "10395"),
    (9, 0, "10395/64"),
    (9, 1, "8505/16"),
    (9, 2, "26775/16"),
    (9, 3, "20853/4"),
    (9, 4, "32193/2"),
    (9, 5, "48510"),
    (9, 6, "135135"),
    (10, 0, "135135/128"),
    (10, 1, "218295/64"),
    (10, 2, "168525/16"),
    (10, 3, "512883/16"),
    (10, 4, "386271/4"),
    (10, 5, "571725/2"),
    (10, 6, "810810"),
    (10, 7, "2027025"),
    (11, 0, "2027025/256"),
    (11, 1, "405405/16"),
    (11, 2, "4937625/64"),
    (11, 3, "7388955/32"),
    (11, 4, "10938159/16"),
    (11, 5, "3992175/2"),
    (11, 6, "5675670"),
    (11, 7, "30405375/2"),
    (11, 8, "34459425"),
    (12, 0, "54729675/256"),
    (12, 1, "41216175/64"),
    (12, 2, "60904305/32"),
    (12, 3, "177968745/32"),
    (12, 4, "256944105/16"),
    (12, 5, "182035425/4"),
    (12, 6, "497972475/4"),
    (12, 7, "34459425/512"),
    (12, 8, "631756125/2"),
    (12, 9, "654729075"),
    (13, 0, "516891375/256"),
    (13, 1, "1543917375/256"),
    (13, 2, "564729165/32"),
    (13, 3, "816623775/16"),
    (13, 4, "146029950"),
    (13, 5, "6588578139/16"),
    (13, 6, "9070035975/8"),
    (13, 7, "654729075/1024"),
    (13, 8, "11952825885/4"),
    (13, 9, "7202019825"),
    (13, 10, "13749310575"),
    (14, 0, "21606059475/1024"),
    (14, 1, "16023632625/256"),
    (14, 2, "46514953485/256"),
    (14, 3, "16675523865/32"),
    (14, 4, "23672927025/16"),
    (14, 5, "66411007767/16"),
    (14, 6, "45759368655/4"),
    (14, 7, "13749310575/2048"),
    (14, 8, "245021061285/8"),
    (14, 9, "311520093885/4"),
    (14, 10, "178741037475"),
    (14, 11, "316234143225"),
    (15, 0, "123743795175/512"),
    (15, 1, "730022918625/1024"),
    (15, 2, "1052618271705/512"),
    (15, 3, "1499012960445/256"),
    (15, 4, "264272735725/16"),
    (15, 5, "46109143548"),
    (15, 6, "2030915622645/16"),
    (15, 7, "316234143225/4096"),
    (15, 8, "2737188448995/8"),
    (15, 9, "891435459915"),
    (15, 10, "8758310836275/4"),
    (15, 11, "9592435677825/2"),
    (15, 12, "7905853580625"),
    (16, 0, "12333131585775/4096"),
    (16, 1, "9051629461875/1024"),
    (16, 2, "811209323925/32"),
    (16, 3, "36751659059115/512"),
    (16, 4, "51544870752375/256"),
    (16, 5, "17905106587095/32"),
    (16, 6, "49185509458365/32"),
    (16, 7, "7905853580625/8192"),
    (16, 8, "66469370924775/16"),
    (16, 9, "87660410042205/8"),
    (16, 10, "111209007034125/4"),
    (16, 11, "132080460486975/2"),
    (16, 12, "276704875321875/2"),
    (16, 13, "213458046676875"),
    (17, 0, "166022925193125/4096"),
    (17, 1, "485419409850375/4096"),
    (17, 2, "346386381315975/1024"),
    (17, 3, "487957139745075/512"),
    (17, 4, "340526280419325/128"),
    (17, 5, "1884818339393535/256"),
    (17, 6, "1291176578473425/64"),
    (17, 7, "213458046676875/16384"),
    (17, 8, "1746012465049635/32"),
    (17, 9, "1158795684753525/8"),
    (17, 10, "2992184547677325/8"),
    (17, 11, "1849593268648125/2"),
    (17, 12, "2126674613188125"),
    (17, 13, "4269160933537500"),
    (17, 14, "6190283353629375"),
    (18, 0, "9605612100459375/16384"),
    (18, 1, "6996680418853125/4096"),
    (18, 2, "19889546438136375/4096"),
    (18, 3, "13948724683018125/1024"),
    (18, 4, "19385928833646375/512"),
    (18, 5, "1670327729904015/16"),
    (18, 6, "73041994202191875/256"),
    (18, 7, "6190283353629375/32768"),
    (18, 8, "49363995431765475/64"),
    (18, 9, "65744175999773079/32"),
    (18, 10, "42871352128175025/8"),
    (18, 11, "108418387292179965/8"),
    (18, 12, "65350162166664375/2"),
    (18, 13, "72817654989704625"),
    (18, 14, "140313089348932500"),
    (18, 15, "191898783962510625"),
    (19, 0, "18570850060888125/2048"),
    (19, 1, "431541017698415625/16384"),
    (19, 2, "611196796805970375/8192"),
    (19, 3, "854034802440694875/4096"),
    (19, 4, "295622640130442625/512"),
    (19, 5, "50770632935200815/32"),
    (19, 6, "2214495362565119025/512"),
    (19, 7, "191898783962510625/65536"),
    (19, 8, "2990161669353791775/256"),
    (19, 9, "498588953042078271/16"),
    (19, 10, "2616690164139006165/32"),
    (19, 11, "3354058884543031665/16"),
    (19, 12, "4155321837251710125/8"),
    (19, 13, "1221898913059324500"),
    (19, 14, "5282787813987308625/2"),
    (19, 15, "9786837982088041875/2"),
    (19, 16, "6332659870762850625"),
    (20, 0, "9786837982088041875/65536"),
    (20, 1, "7087874439905634375/16384"),
    (20, 2, "10007297452695918375/8192"),
    (20, 3, "27873406624278340125/8192"),
    (20, 4, "38464769339580709125/4096"),
    (20, 5, "26342984670839932095/1024"),
    (20, 6, "71637824483699384925/1024"),
    (20, 7, "6332659870762850625/131072"),
    (20, 8, "96601743007909225875/512"),
    (20, 9, "128930498895120139989/256"),
    (20, 10, "42442944415051043115/32"),
    (20, 11, "27436266153939996045/8"),
    (20, 12, "138292854856604823375/16"),
    (20, 13, "167929854347224344375/8"),
    (20, 14, "192834342120022477875/4"),
    (20, 15, "404714535376934908125/4"),
    (20, 16, "360961612633482485625/2"),
    (20, 17, "221643095476699771875"),
];

/// `(n, d, H_{1,n}[d] / π^{2(n-d)})`.
pub const GENUS1_ROW: &[(u32, u32, &str)] = &[
    (1, 0, "1/12"),
    (1, 1, "1/8"),
    (2, 0, "1/16"),
    (2, 1, "1/4"),
    (2, 2, "5/8"),
    (3, 0, "11/96"),
    (3, 1, "3/8"),
    (3, 2, "65/48"),
    (3, 3, "35/8"),
    (4, 0, "21/64"),
    (4, 1, "33/32"),
    (4, 2, "305/96"),
    (4, 3, "175/16"),
    (4, 4, "315/8"),
    (5, 0, "163/128"),
    (5, 1, "63/16"),
    (5, 2, "745/64"),
    (5, 3, "1127/32"),
    (5, 4, "945/8"),
    (5, 5, "3465/8"),
    (6, 0, "1595/256"),
    (6, 1, "2445/128"),
    (6, 2, "21275/384"),
    (6, 3, "10283/64"),
    (6, 4, "15477/32"),
    (6, 5, "12705/8"),
    (6, 6, "45045/8"),
    (7, 0, "18825/512"),
    (7, 1, "14355/128"),
    (7, 2, "82375/256"),
    (7, 3, "116907/128"),
    (7, 4, "84279/32"),
    (7, 5, "252945/32"),
    (7, 6, "405405/16"),
    (7, 7, "675675/8"),
    (8, 0, "260085/1024"),
    (8, 1, "395325/512"),
    (8, 2, "1126475/512"),
    (8, 3, "1578339/256"),
    (8, 4, "2222919/128"),
    (8, 5, "1600005/32"),
    (8, 6, "2387385/16"),
    (8, 7, "7432425/16"),
    (8, 8, "11486475/8"),
    (9, 0, "4116315/2048"),
    (9, 1, "780255/128"),
    (9, 2, "17702825/1024"),
    (9, 3, "24596187/512"),
    (9, 4, "17069781/128"),
    (9, 5, "47966325/128"),
    (9, 6, "34462285/32"),
    (9, 7, "25450425/8"),
    (9, 8, "19144125/2"),
    (9, 9, "218243025/8"),
    (10, 0, "73417995/4096"),
    (10, 1, "11140505/2048"),
    (10, 2, "314129025/2048"),
    (10, 3, "433887111/1024"),
    (10, 4, "596350053/512"),
    (10, 5, "412393245/128"),
    (10, 6, "1157510783/128"),
    (10, 7, "103528425/4"),
    (10, 8, "602657055/8"),
    (10, 9, "218243025"),
    (10, 10, "4583103525/8"),
    (11, 0, "1456873425/8192"),
    (11, 1, "1101269925/2048"),
    (11, 2, "6209382375/4096"),
    (11, 3, "8539707015/2048"),
    (11, 4, "5827734675/512"),
    (11, 5, "15945353325/512"),
    (11, 6, "22022084487/256"),
    (11, 7, "30846831015/128"),
    (11, 8, "21914407515/32"),
    (11, 9, "31296049785/16"),
    (11, 10, "87078966975/16"),
    (11, 11, "105411381075/8"),
    (12, 0, "31832972325/16384"),
    (12, 1, "48076823025/8192"),
    (12, 2, "135269701875/8192"),
    (12, 3, "185426394615/4096"),
    (12, 4, "251769660615/2048"),
    (12, 5, "170859190425/512"),
    (12, 6, "7290122177/8"),
    (12, 7, "643590359685/256"),
    (12, 8, "898172490215/128"),
    (12, 9, "631580764815/32"),
    (12, 10, "1764494857125/32"),
    (12, 11, "2354187510675/16"),
    (12, 12, "2635284526875/8"),
    (13, 0, "759408232275/32768"),
    (13, 1, "286496750925/4096"),
    (13, 2, "3219307441625/16384"),
    (13, 3, "4401709330095/8192"),
    (13, 4, "2976421242465/2048"),
    (13, 5, "8031549267225/2048"),
    (13, 6, "339777246393/32"),
    (13, 7, "3707081523495/128"),
    (13, 8, "10205899285855/128"),
    (13, 9, "28319986049355/128"),
    (13, 10, "39312334336275/64"),
    (13, 11, "53584118713125/32"),
    (13, 12, "34258698849375/8"),
    (13, 13, "71152682225625/8"),
    (14, 0, "19639202658075/65536"),
    (14, 1, "29616921058725/32768"),
    (14, 2, "83094183797625/32768"),
    (14, 3, "113381114321475/16384"),
    (14, 4, "152856379904085/8192"),
    (14, 5, "102641114315025/2048"),
    (14, 6, "276095298454833/2048"),
    (14, 7, "46658673053055/128"),
    (14, 8, "127090011696915/128"),
    (14, 9, "348671089506285/128"),
    (14, 10, "479892186999225/64"),
    (14, 11, "1311975146807325/64"),
    (14, 12, "1741923072264575/32"),
    (14, 13, "1067290233384375/8"),
    (14, 14, "2063427784543125/8"),
];

/// `(n, d, H_{2,n}[d] / π^{2(n+3-d)})`.
pub const GENUS2_ROW: &[(u32, u32, &str)] = &[
    (1, 0, "29/2560"),
    (1, 1, "1/32"),
    (1, 2, "119/1152"),
    (1, 3, "35/96"),
    (1, 4, "105/128"),
    (2, 0, "337/9216"),
    (2, 1, "261/2560"),
    (2, 2, "75/256"),
    (2, 3, "119/128"),
    (2, 4, "105/32"),
    (2, 5, "1155/128"),
    (3, 0, "319/2048"),
    (3, 1, "337/768"),
    (3, 2, "1399/1152"),
    (3, 3, "2695/768"),
    (3, 4, "2779/256"),
    (3, 5, "9625/256"),
    (3, 6, "15015/128"),
    (4, 0, "10109/12288"),
    (4, 1, "4785/2048"),
    (4, 2, "19583/3072"),
    (4, 3, "567/32"),
    (4, 4, "26161/512"),
    (4, 5, "79695/512"),
    (4, 6, "135135/256"),
    (4, 7, "225225/128"),
    (5, 0, "42445/8192"),
    (5, 1, "30327/2048"),
    (5, 2, "185063/4608"),
    (5, 3, "105007/960"),
    (5, 4, "1559847/5120"),
    (5, 5, "897039/1024"),
    (5, 6, "1354353/512"),
    (5, 7, "1126125/128"),
    (5, 8, "3828825/128"),
    (6, 0, "620641/16384"),
    (6, 1, "891345/8192"),
    (6, 2, "1205735/4096"),
    (6, 3, "24343627/30720"),
    (6, 4, "4426961/2048"),
    (6, 5, "12338073/2048"),
    (6, 6, "53113775/3072"),
    (6, 7, "26591565/512"),
    (6, 8, "21696675/128"),
    (6, 9, "72747675/128"),
    (7, 0, "10329655/32768"),
    (7, 1, "1861923/2048"),
    (7, 2, "15099635/6144"),
    (7, 3, "26907839/4096"),
    (7, 4, "362089239/20480"),
    (7, 5, "197828785/4096"),
    (7, 6, "827349809/6144"),
    (7, 7, "49424375/128"),
    (7, 8, "591425835/512"),
    (7, 9, "945719775/256"),
    (7, 10, "1527701175/128"),
    (8, 0, "192765615/65536"),
    (8, 1, "278900685/32768"),
    (8, 2, "1130917375/49152"),
    (8, 3, "250801845/4096"),
    (8, 4, "1337766877/8192"),
    (8, 5, "3604505311/8192"),
    (8, 6, "4929397655/4096"),
    (8, 7, "6875894025/2048"),
    (8, 8, "4926846925/512"),
    (8, 9, "916620705/32"),
    (8, 10, "22915517625/256"),
    (8, 11, "35137127025/128"),
];

/// `(n, d, H_{3,n}[d] / π^{2(n+6-d)})`.
pub const GENUS3_ROW: &[(u32, u32, &str)] = &[
    (1, 0, "20555/1327104"),
    (1, 1, "575/14336"),
    (1, 2, "8099/73728"),
    (1, 3, "56749/184320"),
    (1, 4, "8203/9218"),
    (1, 5, "17479/6144"),
    (1, 6, "5005/512"),
    (1, 7, "25025/1024"),
    (2, 0, "77633/884736"),
    (2, 1, "102775/442368"),
    (2, 2, "1920563/3096576"),
    (2, 3, "624463/368640"),
    (2, 4, "48189/10240"),
    (2, 5, "500489/36864"),
    (2, 6, "87087/2048"),
    (2, 7, "75075/512"),
    (2, 8, "425425/1024"),
    (3, 0, "1038595/1769472"),
    (3, 1, "77633/49152"),
    (3, 2, "11069909/2654208"),
    (3, 3, "8245679/737280"),
    (3, 4, "3737107/122880"),
    (3, 5, "6218927/73728"),
    (3, 6, "26863837/110592"),
    (3, 7, "575575/768"),
    (3, 8, "15740725/6144"),
    (3, 9, "8083075/1024"),
    (4, 0, "16011391/3538944"),
    (4, 1, "7270165/589824"),
    (4, 2, "172014797/5308416"),
    (4, 3, "379718161/4423680"),
    (4, 4, "2354953/10240"),
    (4, 5, "92087039/147456"),
    (4, 6, "383277895/221184"),
    (4, 7, "183688505/36864"),
    (4, 8, "186931745/12288"),
    (4, 9, "105079975/2048"),
    (4, 10, "169744575/1024"),
    (5, 0, "31040465/786432"),
    (5, 1, "16011391/147456"),
    (5, 2, "1008891097/3538944"),
    (5, 3, "6627865109/8847360"),
    (5, 4, "2277007409/1146880"),
    (5, 5, "3658297225/688128"),
    (5, 6, "2129633311/147456"),
    (5, 7, "739407955/18432"),
    (5, 8, "8496138365/73728"),
    (5, 9, "1430704275/4096"),
    (5, 10, "1188212025/1024"),
    (5, 11, "3904125225/1024"),
    (6, 0, "201498115/524288"),
    (6, 1, "279364185/262144"),
    (6, 2, "2200898005/786432"),
    (6, 3, "8629787107/1179648"),
    (6, 4, "9925860397/516096"),
    (6, 5, "210466671811/4128768"),
    (6, 6, "156612960491/1146880"),
    (6, 7, "18256755985/49152"),
    (6, 8, "456931637591/442368"),
    (6, 9, "72883701605/24576"),
    (6, 10, "36630879285/4096"),
    (6, 11, "29931626725/1024"),
    (6, 12, "97603130625/1024"),
];

/// `(g, n, nonzero exponents, F_{g,n}[d,0,…,0] / π^{2(3g-3+n-Σd)})`.
pub const MULTI_INDEX: &[(u32, u32, &str, &str)] = &[
    (0, 5, "1,1", "18"),
    (0, 6, "1,1", "27"),
    (0, 6, "2,1", "135"),
    (0, 6, "1,1,1", "162"),
    (0, 7, "1,1", "81"),
    (0, 7, "2,1", "300"),
    (0, 7, "3,1", "1260"),
    (0, 7, "2,2", "1350"),
    (0, 7, "1,1,1", "324"),
    (0, 7, "2,1,1", "1620"),
    (0, 7, "1,1,1,1", "1944"),
    (0, 8, "1,1", "675/2"),
    (0, 8, "2,1", "4575/4"),
    (0, 8, "3,1", "7875/2"),
    (0, 8, "4,1", "14175"),
    (0, 8, "2,2", "4125"),
    (0, 8, "3,2", "15750"),
    (0, 8, "1,1,1", "1215"),
    (0, 8, "2,1,1", "4500"),
    (0, 8, "3,1,1", "18900"),
    (0, 8, "2,2,1", "20250"),
    (0, 8, "1,1,1,1", "4860"),
    (0, 8, "2,1,1,1", "24300"),
    (0, 8, "1,1,1,1,1", "29160"),
    (1, 2, "1,1", "3/8"),
    (1, 3, "1,1", "3/2"),
    (1, 3, "2,1", "15/4"),
    (1, 3, "1,1,1", "9/4"),
    (1, 4, "1,1", "27/8"),
    (1, 4, "2,1", "195/16"),
    (1, 4, "3,1", "315/8"),
    (1, 4, "2,2", "75/2"),
    (1, 4, "1,1,1", "27/2"),
    (1, 4, "2,1,1", "135/4"),
    (1, 4, "1,1,1,1", "81/4"),
    (1, 5, "1,1", "99/8"),
    (1, 5, "2,1", "305/8"),
    (1, 5, "3,1", "525/4"),
    (1, 5, "4,1", "945/2"),
    (1, 5, "2,2", "1075/8"),
    (1, 5, "3,2", "3675/8"),
    (1, 5, "1,1,1", "81/2"),
    (1, 5, "2,1,1", "585/4"),
    (1, 5, "3,1,1", "945/2"),
    (1, 5, "2,2,1", "450"),
    (1, 5, "1,1,1,1", "162"),
    (1, 5, "2,1,1,1", "405"),
    (1, 5, "1,1,1,1,1", "243"),
    (1, 6, "1,1", "945/16"),
    (1, 6, "2,1", "11175/64"),
    (1, 6, "3,1", "16905/32"),
    (1, 6, "4,1", "14175/8"),
    (1, 6, "5,1", "51975/8"),
    (1, 6, "2,2", "6475/12"),
    (1, 6, "3,2", "29225/16"),
    (1, 6, "4,2", "51975/8"),
    (1, 6, "3,3", "25725/4"),
    (1, 6, "1,1,1", "1485/8"),
    (1, 6, "2,1,1", "4575/8"),
    (1, 6, "3,1,1", "7875/4"),
    (1, 6, "4,1,1", "14175/2"),
    (1, 6, "2,2,1", "16125/8"),
    (1, 6, "3,2,1", "55125/8"),
    (1, 6, "2,2,2", "6750"),
    (1, 6, "1,1,1,1", "1215/2"),
    (1, 6, "2,1,1,1", "8775/4"),
    (1, 6, "3,1,1,1", "14175/2"),
    (1, 6, "2,2,1,1", "6750"),
    (1, 6, "1,1,1,1,1", "2430"),
    (1, 6, "2,1,1,1,1", "6075"),
    (1, 6, "1,1,1,1,1,1", "3645"),
    (2, 2, "1,1", "9/32"),
    (2, 2, "2,1", "119/128"),
    (2, 2, "3,1", "105/32"),
    (2, 2, "4,1", "945/128"),
    (2, 2, "2,2", "1225/384"),
    (2, 2, "3,2", "1015/128"),
    (2, 3, "1,1", "783/640"),
    (2, 3, "2,1", "225/64"),
    (2, 3, "3,1", "357/32"),
    (2, 3, "4,1", "315/8"),
    (2, 3, "5,1", "3465/32"),
    (2, 3, "2,2", "25585/2304"),
    (2, 3, "3,2", "14875/384"),
    (2, 3, "4,2", "3465/32"),
    (2, 3, "3,3", "7105/64"),
    (2, 3, "1,1,1", "27/8"),
    (2, 3, "2,1,1", "357/32"),
    (2, 3, "3,1,1", "315/8"),
    (2, 3, "4,1,1", "2835/32"),
    (2, 3, "2,2,1", "1225/32"),
    (2, 3, "3,2,1", "3045/32"),
    (2, 3, "2,2,2", "1575/16"),
    (2, 4, "1,1", "1685/256"),
    (2, 4, "2,1", "6995/384"),
    (2, 4, "3,1", "13475/256"),
    (2, 4, "4,1", "41685/256"),
    (2, 4, "5,1", "144375/256"),
    (2, 4, "6,1", "225225/128"),
    (2, 4, "2,2", "241825/4608"),
    (2, 4, "3,2", "125167/768"),
    (2, 4, "4,2", "72135/128"),
    (2, 4, "5,2", "3465/2"),
    (2, 4, "3,3", "71785/128"),
    (2, 4, "4,3", "112455/64"),
    (2, 4, "1,1,1", "2349/128"),
    (2, 4, "2,1,1", "3375/64"),
    (2, 4, "3,1,1", "5355/32"),
    (2, 4, "4,1,1", "4725/8"),
    (2, 4, "5,1,1", "51975/32"),
    (2, 4, "2,2,1", "127925/768"),
    (2, 4, "3,2,1", "74375/128"),
    (2, 4, "3,3,1", "106575/64"),
    (2, 4, "2,2,2", "18375/32"),
    (2, 4, "3,2,2", "13125/8"),
    (2, 4, "1,1,1,1", "405/8"),
    (2, 4, "2,1,1,1", "5355/32"),
    (2, 4, "3,1,1,1", "4725/8"),
    (2, 4, "4,1,1,1", "42525/32"),
    (2, 4, "2,2,1,1", "18375/32"),
    (2, 4, "3,2,1,1", "45675/32"),
    (2, 4, "2,2,2,1", "23625/16"),
    (3, 2, "1,1", "8625/14336"),
    (3, 2, "2,1", "40495/24576"),
    (3, 2, "3,1", "56749/12288"),
    (3, 2, "4,1", "41015/3072"),
    (3, 2, "5,1", "87395/2048"),
    (3, 2, "6,1", "75075/512"),
    (3, 2, "7,1", "375375/1024"),
    (3, 2, "2,2", "56765/12288"),
    (3, 2, "3,2", "743917/55296"),
    (3, 2, "4,2", "87353/2048"),
    (3, 2, "5,2", "297605/2048"),
    (3, 2, "6,2", "385385/1024"),
    (3, 2, "3,3", "131467/3072"),
    (3, 2, "4,3", "37485/256"),
    (3, 2, "5,3", "193655/512"),
    (3, 2, "4,4", "191205/512"),
];

/// Polynomials in `n` (ascending coefficients) with
/// `MV_{g,n}/π^{6g-6+2n} = 2^n (2g-3+n)!(4g-4+n)!/(6g-7+2n)! (p_g(n) + γ_{2g-3+n} q_g(n))`,
/// indexed by genus `0..=6`.
pub const VOLUME_ANSATZ: &[(&[&str], &[&str])] = &[
    (&[], &["1/4"]),
    (&["1/6"], &["1/6"]),
    (&["5/36"], &["7/18", "28/135"]),
    (&["643/1944", "245/3888"], &["6523/8505", "1784/8505"]),
    (
        &["95413/194400", "1757/23328"],
        &["5951381/2296350", "40882696/54729675", "1186528/23455575"],
    ),
    (
        &["63657059/48988800", "4218671/16796160", "38213/3359232"],
        &["63849553/12629925", "50144427856/41868201375", "83632064/1196234325"],
    ),
    (
        &[
            "61888029881/26453952000",
            "11411443987/27713664000",
            "59406613/3325639680",
        ],
        &[
            "1636294928657/110827591875",
            "9008283258227896/2470014540118125",
            "185272285982144/640374140030625",
            "2562397434368/352859220016875",
        ],
    ),
];

/// Numerator polynomials with
/// `π² SV_{g,n} = (p*_g(n)/(2g-3+n) + γ_{2g-3+n} q*_g(n)) / (p_g(n) + γ_{2g-3+n} q_g(n))`.
pub const SIEGEL_VEECH_ANSATZ: &[(&[&str], &[&str])] = &[
    (&[], &["5/24", "1/24"]),
    (&["0", "-1/36", "1/36"], &["1", "1/36"]),
    (&["811/1080", "20/27", "5/216"], &["329/540", "-35/324", "14/405"]),
    (
        &["11861/9720", "355/1458", "-143/7776", "245/23328"],
        &["69617/18255", "52907/51030", "892/25515"],
    ),
    (
        &["4368611/388800", "514241/129600", "1428289/3499200", "1757/139968"],
        &[
            "14820167/4592700",
            "480686827/1970268300",
            "-322892/164189025",
            "593264/70366725",
        ],
    ),
    (
        &[
            "128194553/10497600",
            "124054303/55112400",
            "353997223/3527193600",
            "867413/50388480",
            "38213/20155392",
        ],
        &[
            "957632944/44778825",
            "1269997838947/251209208250",
            "48489191848/125604604125",
            "41816032/3588702975",
        ],
    ),
    (
        &[
            "10221213098113/123451776000",
            "7511464839971/317447424000",
            "8797861897271/3491921664000",
            "63937638461/498845952000",
            "59406613/19953838080",
        ],
        &[
            "1719710639461433/79130900598750",
            "302389725584289713/103740610684961250",
            "6702081021375716/51870305342480625",
            "931707432208544/51870305342480625",
            "1281198717184/1058577660050625",
        ],
    ),
];

/// `Q_g(y)` (ascending in `y`) with
/// `Σ_n H_{g,n}[0]/π^{6g-6+2n} x^n/n! = -δ_{g,1} ln(y)/12 + y^{5(1-g)} Q_g(y)`, `y = √(1-x)`.
pub const GENERATING_SERIES: &[&[&str]] = &[
    &["-8/15"],
    &["1/12", "-1/12"],
    &["7/2880", "5/2304", "7/11520"],
    &["245/165888", "223/165888", "17/36864", "31/516096"],
    &[
        "259553/79626240",
        "8785/2654208",
        "24551/17694720",
        "2521/8847360",
        "127/5242880",
    ],
    &[
        "1337455/84934656",
        "9147257/509607936",
        "1132327/127401984",
        "1352317/566231040",
        "10949/31457280",
        "6643/301989888",
    ],
    &[
        "245229441961/1834588569600",
        "2079231455/12230590464",
        "15810556787/163074539520",
        "26920481/849346560",
        "9522007931/1522029035520",
        "1332533/1887436800",
        "24046109/676457349120",
    ],
];

/// Published genus-zero one-row polynomials as `(prefactor, ascending integer coefficients)`,
/// indexed by `d`.
pub const GENUS0_ROW_POLYS: &[(&str, &[i64])] = &[
    ("1", &[1]),
    ("1", &[-3, 1]),
    ("1", &[52, -34, 5]),
    ("3/2", &[-1392, 1307, -367, 32]),
    ("1/6", &[751506, -1002721, 419969, -70496, 4138]),
    ("15/2", &[-1221210, 2493951, -1459754, 365383, -41536, 1766]),
    (
        "1/20",
        &[
            9190581840,
            -48501218874,
            40768140229,
            -14079371820,
            2385358645,
            -197270496,
            6377776,
        ],
    ),
    (
        "7/40",
        &[
            713960984880,
            1627352271762,
            -2422330473875,
            1152274787382,
            -266767548125,
            32861488488,
            -2073237920,
            52783968,
        ],
    ),
    (
        "5/56",
        &[
            -937368548035920,
            86564417888466,
            976060154881647,
            -701967732545618,
            217683482202865,
            -36378043869776,
            3416784683368,
            -170178415232,
            3504015400,
        ],
    ),
];

/// `(ρ_d, r_d(n) ascending)` with
/// `H_{1,n}[d] = 2^{d-2}(n-1-d)!(ρ_d (n-1)⋯(n-d) + γ_{n-1-d} r_d(n))`, indexed by `d`.
pub const GENUS1_ROW_ANSATZ: &[(&str, &[&str])] = &[
    ("1/6", &["1/6"]),
    ("1/4", &["-1/4", "1/4"]),
    ("25/72", &["35/144", "-65/72", "25/72"]),
    ("7/15", &["413/480", "973/480", "-217/96", "7/15"]),
    (
        "2069/3360",
        &["-12549/2240", "1189/840", "60479/6720", "-4009/840", "2069/3360"],
    ),
    (
        "9713/12096",
        &[
            "-259919/4032",
            "-61105/4032",
            "-90299/6048",
            "710501/24192",
            "-55033/6048",
            "9713/12096",
        ],
    ),
];

/// `(m_g, s_g)` with `MV_{g,n} ~ 2^{-n} π^{6g-6+2n+ε(g)/2} n^{g/2} m_g` and
/// `SV_{g,n} = (n+5-5g)/(6π²) + s_g/(π^{3/2+ε(g)} n^{1/2}) + O(1/n)`, `ε(g) = g mod 2`.
pub const ASYMPTOTIC_CONSTANTS: &[(&str, &str)] = &[
    ("32", "0"),
    ("1/3", "6"),
    ("7/1080", "225/56"),
    ("245/7962624", "171264/8575"),
    ("37079/96074035200", "24227775/2712064"),
    ("38213/28179280429056", "85639233536/2322395075"),
    ("5004682489/369999709488414720000", "19363429564990875/1311947486396416"),
];
