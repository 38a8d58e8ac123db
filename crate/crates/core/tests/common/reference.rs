//! Reference polynomials and degree values used as test oracles.

#![allow(dead_code)]

use std::str::FromStr;

use bott_core::polyfit::RatPoly;
use num_bigint::BigInt;
use num_rational::BigRational;

/// `(coefficient, power)` pairs of an expanded polynomial in `d`.
pub type Terms = &'static [(&'static str, usize)];

/// A polynomial of the form `(1/den) * prod(linear factors) * inner(d)`.
pub struct Factored {
    pub den: &'static str,
    /// Roots `r` of the linear factors `(d - r)`.
    pub roots: &'static [i64],
    pub inner: Terms,
}

pub fn from_terms(terms: Terms) -> RatPoly {
    let top = terms.iter().map(|t| t.1).max().unwrap_or(0);
    let mut coeffs = vec![BigRational::from_integer(0.into()); top + 1];
    for (c, p) in terms {
        coeffs[*p] += BigRational::from_str(c).expect("rational literal");
    }
    RatPoly::from_coeffs(coeffs)
}

pub fn from_factored(f: &Factored) -> RatPoly {
    let mut p = from_terms(f.inner);
    for r in f.roots {
        p = &p * &RatPoly::from_integers(&[-r, 1]);
    }
    let den = BigInt::from_str(f.den).unwrap();
    p.scale(&BigRational::new(1.into(), den))
}

/// Lines in `P^3`.
pub const LINES_P3: Factored = Factored {
    den: "64",
    roots: &[0, 1],
    inner: &[
        ("27", 6),
        ("-117", 5),
        ("269", 4),
        ("-375", 3),
        ("312", 2),
        ("-132", 1),
        ("48", 0),
    ],
};

/// Planes in `P^4`.
pub const PLANES_P4: Factored = Factored {
    den: "82944",
    roots: &[0, 1, -1, -2],
    inner: &[
        ("9", 14),
        ("-18", 13),
        ("-63", 12),
        ("396", 11),
        ("-405", 10),
        ("-1530", 9),
        ("5328", 8),
        ("-4176", 7),
        ("-9414", 6),
        ("27208", 5),
        ("-24347", 4),
        ("-4696", 3),
        ("36572", 2),
        ("-32544", 1),
        ("14400", 0),
    ],
};

/// Planes in `P^5`.
pub const PLANES_P5: Factored = Factored {
    den: "4251528000",
    roots: &[0, 1, -1, -2],
    inner: &[
        ("12800", 23),
        ("-25600", 22),
        ("-224000", 21),
        ("966400", 20),
        ("520800", 19),
        ("-10632000", 18),
        ("18128000", 17),
        ("35186000", 16),
        ("-170677265", 15),
        ("145358830", 14),
        ("449576760", 13),
        ("-1292773830", 12),
        ("778144037", 11),
        ("2164141556", 10),
        ("-5208921230", 9),
        ("3728975455", 8),
        ("3332483181", 7),
        ("-10452711042", 6),
        ("10781927010", 5),
        ("-2523245175", 4),
        ("-7609562253", 3),
        ("11511503406", 2),
        ("-8323547040", 1),
        ("3637418400", 0),
    ],
};

/// Three-planes in `P^5`.
pub const SOLIDS_P5: Factored = Factored {
    den: "54358179840000",
    roots: &[0, 1, -2, -1],
    inner: &[
        ("1125", 28),
        ("15750", 27),
        ("86625", 26),
        ("168750", 25),
        ("-187875", 24),
        ("-38250", 23),
        ("8824725", 22),
        ("23473350", 21),
        ("-32467725", 20),
        ("-128183670", 19),
        ("426415635", 18),
        ("1377078570", 17),
        ("-2137554049", 16),
        ("-7117020302", 15),
        ("15925316455", 14),
        ("37514746370", 13),
        ("-82840806388", 12),
        ("-125157483544", 11),
        ("422227932240", 10),
        ("287672117600", 9),
        ("-1529648949952", 8),
        ("207120164224", 7),
        ("4517312266240", 6),
        ("-3047085731840", 5),
        ("-6253154779136", 4),
        ("11893749153792", 3),
        ("2911913902080", 2),
        ("-8455245004800", 1),
        ("2378170368000", 0),
    ],
};

/// Conics in `P^3`.
pub const CONICS: Factored = Factored {
    den: "2580480",
    roots: &[2],
    inner: &[
        ("150903", 15),
        ("-3809754", 14),
        ("44834472", 13),
        ("-317080224", 12),
        ("1422290970", 11),
        ("-3579080844", 10),
        ("-455933988", 9),
        ("47928493544", 8),
        ("-237841700217", 7),
        ("712127741206", 6),
        ("-1498533401372", 5),
        ("2287674925704", 4),
        ("-2504345972608", 3),
        ("1873638158208", 2),
        ("-859900216320", 1),
        ("182801203200", 0),
    ],
};

/// Plane cubics in `P^3`.
pub const PLANE_CUBICS: Factored = Factored {
    den: "32699842560",
    roots: &[],
    inner: &[
        ("13286025", 24),
        ("-1038081420", 23),
        ("39146062158", 22),
        ("-946074434976", 21),
        ("16407919974303", 20),
        ("-216603408547548", 19),
        ("2251372103607528", 18),
        ("-18776305509313968", 17),
        ("126579622223230407", 16),
        ("-686155959955971780", 15),
        ("2911999863446866566", 14),
        ("-8886007643094113376", 13),
        ("12799827743693355329", 12),
        ("50456388588134712812", 11),
        ("-483658040042985949724", 10),
        ("2229927488252098274992", 9),
        ("-7358275057877141245584", 8),
        ("18804143410678335462720", 7),
        ("-38007885859704936084800", 6),
        ("60658830486712279959808", 5),
        ("-75133955486596446561280", 4),
        ("69793667761693681135616", 3),
        ("-45744106516543857328128", 2),
        ("18819557445986636267520", 1),
        ("-3636764182567924531200", 0),
    ],
};

/// Twisted cubics in `P^3`.
pub const TWISTED_CUBICS: Terms = &[
    ("1095687/50462720", 24),
    ("-19230291/18022400", 23),
    ("24114591/985600", 22),
    ("-3932462817/11468800", 21),
    ("73665592101/22937600", 20),
    ("-23321377833/1146880", 19),
    ("4087404048523/51609600", 18),
    ("-205245946577/2457600", 17),
    ("-79029321809671/68812800", 16),
    ("2854774357217311/309657600", 15),
    ("-6688891988137/143360", 14),
    ("895445339622112187/3406233600", 13),
    ("-4177328126526143027/2270822400", 12),
    ("1134029525022301939/94617600", 11),
    ("-29052565860084958379/464486400", 10),
    ("1100107099486708819/4300800", 9),
    ("-31950097995158831119/38707200", 8),
    ("365421773568911927/172800", 7),
    ("-8318629615873057099/1935360", 6),
    ("615395937691427021/89600", 5),
    ("-337777058982513508747/39916800", 4),
    ("5167781409451915223/665280", 3),
    ("-693707469384158233/138600", 2),
    ("466431399017887/231", 1),
    ("-383398629664", 0),
];

/// Ruled cubic scrolls in `P^4`.
pub const RULED_CUBICS: Terms = &[
    ("1089331/2820745970948505600", 54),
    ("-4609327/138135296519700480", 53),
    ("17053361977/12432176686773043200", 52),
    ("-44006738257/1243217668677304320", 51),
    ("43540862009/68559797904998400", 50),
    ("-6776065867607/822717574859980800", 49),
    ("25203282464989/329087029943992320", 48),
    ("-95461703632727/205679393714995200", 47),
    ("3121945759267787/3290870299439923200", 46),
    ("13975371538743871/987261089831976960", 45),
    ("-1762263793046822003/9872610898319769600", 44),
    ("1571373547792223293/1645435149719961600", 43),
    ("-18657333817850689/21095322432307200", 42),
    ("-21162893089184824063/822717574859980800", 41),
    ("8817237395388371983/42070785078067200", 40),
    ("-7285835577039579827299/7404458173739827200", 39),
    ("18439965173115436460101/2278294822689177600", 38),
    ("-30625726302752154570146789/251751577907154124800", 37),
    ("286671605346783151488709819/201401262325723299840", 36),
    ("-5957731889573498708183240461/503503155814308249600", 35),
    ("946219385360559194318492423/13078004047124889600", 34),
    ("-28843644632003758667785804741/88853498084877926400", 33),
    ("3586612308873070845414316631/3702229086869913600", 32),
    ("-2772990057804229211772760003/3173339217317068800", 31),
    ("-173239617944054456458227898277/17770699616975585280", 30),
    ("3107360934070968268891455300733/44426749042438963200", 29),
    ("-1302777164405876523072798778669/4936305449159884800", 28),
    ("2175543494720246680252051667789/3748506950455787520", 27),
    ("-15324266643945858395023213928441/88853498084877926400", 26),
    (
        "-583723723691983350730395768869707/133280247127316889600",
        25,
    ),
    ("295008612506350533900867771909281/14808916347479654400", 24),
    ("-72882298518045984492971696381249/1514548262810419200", 23),
    (
        "3179423312365559691881647284007591/59235665389918617600",
        22,
    ),
    (
        "65074915758634148942372090942475703/799681482763901337600",
        21,
    ),
    (
        "-17650658027740832446748837419090939/33566877054287216640",
        20,
    ),
    (
        "43155219287681067897344483362302109/35402565643193548800",
        19,
    ),
    (
        "-30042531700267289895379997718912521/22377918036191477760",
        18,
    ),
    (
        "-749894075579299475576086383836784223/906305680465754849280",
        17,
    ),
    ("1152884114126290978903651885817821/176296623184281600", 16),
    (
        "-679247544279215190070362388445065693/49980092672743833600",
        15,
    ),
    (
        "27244209645180356835326895182601977/1851114543434956800",
        14,
    ),
    (
        "-14180655522525890878698424573977769/8330015445457305600",
        13,
    ),
    (
        "-17786673868531949329900173945074227/694167953788108800",
        12,
    ),
    ("8140256480874854682039834827204717/148750275811737600", 11),
    (
        "-15847193428252892198587722393037621/231389317929369600",
        10,
    ),
    ("51203085967146132778275681925029671/851933397830860800", 9),
    ("-415833099791358148948760413114949/10846374277939200", 8),
    ("190922280640278098795730933090799/10846374277939200", 7),
    ("-47833769039838754264953305641/8608233553920", 6),
    ("2764737243980163013076109790463/2560949482291200", 5),
    ("-1553358364438869321892260077/17784371404800", 4),
    ("-1981299728200259795937983/242514155520", 3),
    ("15743878343562160667/7623616", 2),
    ("-655521591855018725/7351344", 1),
    ("4625512425", 0),
];

/// Elliptic quartics in `P^3`.
pub const ELLIPTIC_QUARTICS: Terms = &[
    ("77991978249/47023181004800", 32),
    ("-142130943/922746880", 31),
    ("8109239447979/1175579525120", 30),
    ("-4150267051797/20992491520", 29),
    ("47676232841150619/11755795251200", 28),
    ("-6615027446596551/104962457600", 27),
    ("128385059997089001/167939932160", 26),
    ("-103459871906659801/14129561600", 25),
    ("893796960041917863271/16277254963200", 24),
    ("-312845973151702414313/1017328435200", 23),
    ("4312587609200253695639/4069313740800", 22),
    ("6155781582234103357/7266631680", 21),
    ("-1105621403101024328482787/24415882444800", 20),
    ("2134617904050477326290337/5410337587200", 19),
    ("-1027704290752048951537337771/476109707673600", 18),
    ("1568309607110425883232529237/223176425472000", 17),
    ("399314335681097660200615893191/57133164920832000", 16),
    ("-127911974311612787565094357769/396758089728000", 15),
    ("729760755266942589134714032019/238054853836800", 14),
    ("-18285322486683264514566399967249/892705701888000", 13),
    ("15050777906503580350914982390277/137339338752000", 12),
    ("-8362721204990643447960751421719/17167417344000", 11),
    ("178565283439979930078484872809/98099527680", 10),
    ("-2731787128737717049736180171243/476872704000", 9),
    ("1125598445944774654288515801691861/74392141824000", 8),
    ("-58025484355390407710374488759691/1743565824000", 7),
    ("16796039461040747482814365174429/278970531840", 6),
    ("-8521350244073783951990040324653/96864768000", 5),
    ("599422208545470260381592707347/5930496000", 4),
    ("-796327032680715287225577370219/9081072000", 3),
    ("434272227079029305979707333/8072064", 2),
    ("-14906420412807524159489839/720720", 1),
    ("3713124778880030320", 0),
];

/// Degrees for Segre threefolds in `P^5` at `d = 4..=28`.
pub const SEGRE_DEGREES: &[(i64, &str)] = &[
    (4, "4985292672535"),
    (5, "38085453623924002125608"),
    (6, "75285508677103874434199729447346"),
    (7, "6919928722801305898152558631141006297978"),
    (8, "42181954432466686484802366327946036350563667373"),
    (9, "30538531184782134440883223805188165885850765266730973"),
    (10, "4224340951726565859342587822879909669270072209918091111509"),
    (11, "158437528281133532734337703310993668084277908103801228619349318"),
    (12, "2080035353059957499641534559924163791462457116358313751435919907641"),
    (13, "11549735996636189943619254985547139290129087463355134074887299468381440"),
    (14, "31296770227603270473657644859463859788303319257226489697655766935282861144"),
    (15, "46218251138854455896028288030807107836206397262026919058025989004860345865068"),
    (16, "40573178025017053248163455791995253138333248830219749681901524680514920694647875"),
    (17, "22696403460389782282918120220096612693066990902486735463037695748458355012102065130"),
    (18, "8560094850432050145388608162764331545974912158826771912534187363304630242378140685505"),
    (19, "2280218446179281906894436399299532691147069188695294809825377606946754403932028306244123"),
    (20, "445913122370782785268625533245649250274532741301118606978525517483582671680154337345798650"),
    (21, "66136044830890785552763166513088475675562647217232322960605533153943919181299528743949231995"),
    (22, "7648060182749239379957328222725038044389468341441118678038359708033154622298562461760431031987"),
    (23, "70612212380747079078375544027242773510506336035275026531817959540511125994738199269690002855831"),
    (24, "53126049393404266440928946834127714486755547747259961078332514818104185788066175129628674092418346"),
    (25, "3315561352388199144671538442416320830215174679718026171794913021436371907104234446224006732128647329"),
    (26, "174334857471395667347731728239322112964231210603282356701591598514084204408291171080634141000772703155"),
    (27, "7829482987143513944990986949407455476367377747552625701320278751035638067417139596314040948040344857400"),
    (28, "303991364820542511002698414336553281396075120749252336213971319871871164262548779281153647072907136671375"),
];
