"""Fixed pool of 256 twenty-letter lowercase words used for descriptor values.

Built once by ``build_pool`` in ``dwgen.randomness``: SplitMix64 seeded with
0x5EED, each word made of 20 consecutive draws mapped to ``a``-``z`` by
``floor(u * 26)``, repeats skipped. Regenerating must reproduce this table.
"""

WORDS = (
    "bijlbjebwgjkderpybht",
    "tlxobpzdidrwncekigbh",
    "jafdhcayejemhtsbmxyn",
    "ctldypplrafeoyctlioe",
    "nkauavbogxhbdocmdswl",
    "pwxyspmawqtzoxfdkddu",
    "zsedynbtnojjdzcbzgxn",
    "vozbaritbydwlmslelut",
    "deqzjpcenjycvyrccnoj",
    "aamjzgxdhsulldfwhcdv",
    "qnjaucirauwgolvedipl",
    "uypxlsduzxwrivnmcuxx",
    "ovzvegddjtaqyrzfixrd",
    "tyxogpzbnwbytaeplhkz",
    "xjoqlhblwjfbkbrliaji",
    "zylvgrlekxykqqegfkrk",
    "qckhmaiqqjnkrqvwpvca",
    "zlhgowkdndreinnichhb",
    "zffikpyohzggjjpbbsov",
    "sttanzuzluamkayqszps",
    "yefcchhclcvdwbnbqaju",
    "lficqbaxfwvxwtxhjxxd",
    "hamhfaiwayizozpttpzq",
    "logffvxlimpeandtbeic",
    "wtdoqxuetwvygdeswrqv",
    "raekkiralwepyookhweq",
    "ebyosxyfzhtxsmtxhtzy",
    "tfsyqepuhubimfzqmbuf",
    "tdohgoqvpgleprlibgvi",
    "jfuwgslgrzqprugdsihh",
    "smemnodllzylldxcsezy",
    "akfcbvrqbqzudjfqlylp",
    "rdtdujqpdjaxrxtsoodw",
    "ochgnquuqqcamggvbdzg",
    "hvwczueascpldwutsupe",
    "qjybfdkroqmithfaviwo",
    "hzfhmcrmmpisudkizmhe",
    "zvpxpdckcjhukrewoias",
    "rgxcjhbquegkrdslmlta",
    "qockpdvytkehtaoqkaqr",
    "mhqonedwvqfbpsgvvult",
    "ozlnnofgifkhvurburiu",
    "xuxnolgypcguptcwcict",
    "uggrchigigmjtvobapsw",
    "yoewgkvxebiezygvplqe",
    "zswdgfuscmtbwrpcaxhb",
    "nncffqimbahtnwozfkkd",
    "pzevwrppmavwmizdjqvq",
    "bvtrznqpvejdewcatgnv",
    "sxpyktyvsvurpqwiqfuv",
    "mkmgqcnsvhgeuoppqnwr",
    "xmxsdlwyagccyebfxuaq",
    "yrtyextojgrkxiialeqt",
    "avdzjuygrbtumkydjsfy",
    "rskjvgolddnawtemtuzo",
    "razdzqjcxsfugeequqoz",
    "uzqttmmmdpskqlksewmy",
    "tflbhumgezfwtpqhtpzc",
    "tirduiyrxadxhsrczjay",
    "lzipanzctjlutqjihlfx",
    "zociugxfrreoflbqxmrl",
    "qpgrgkwoscaqavfoadoy",
    "dnegnxhowbgdrcmburmk",
    "srrkbbgptdjctbxktcsb",
    "gccjvdecvwkzsgkrccim",
    "vipwcpmpxzyaecfbymzh",
    "xmwwpamehkivdayvyreo",
    "fpjcwgwpqbkyeoghprxn",
    "cezwjuknrurowzrkqyce",
    "jabmhckliterouwgcsww",
    "wfjtjzihooghvphofbih",
    "nhdgcmrvnhbsuecjrnem",
    "iguuetyesaccqqbalgzu",
    "xtlrikopqxxrjzuacxqx",
    "mdertjgdnzkyqjyuxfll",
    "miekowihwfbiceohyiaw",
    "vfhyvutyhjlveiwmaxdy",
    "inasnkdhbgbkyzlswlcq",
    "tnxezhykaduuxgvnsztg",
    "hsgypkejsodoszgplsds",
    "kckqhssjxtidlieyszwd",
    "xsjzltxekrshmcclhkot",
    "eknesjqkckambocvizkl",
    "urbzdrywamiqjjcluohm",
    "ihpddcllxommlzkusbcl",
    "agevmlbmqxzmhgifdsgd",
    "ckmjlgjfwvdowpoxmklm",
    "qfcutjoyhjqjkpoglmab",
    "tnwmznplzsghgoukjztc",
    "wmlrlvfuccsyeshligvh",
    "arorodlicwynwuhjqkkh",
    "jrjrluqfhydelroucvwc",
    "fjwfawntmkrhjqprzlyh",
    "yfnygeiaenxweofzqzlg",
    "vdtvonselykgtzcwzsgz",
    "udvasduwnsimaxotkdda",
    "yurmmrdhkrtxcsvgclof",
    "kohjrnqlnisnhfdkhgox",
    "rynrncvuyheuhvbwzcgh",
    "pijuwraitxypzughvaew",
    "lrxjgjhtxnkndxhgxbcm",
    "vrhktaaorvgvmokvrvqu",
    "vdxkoluowfbuvknsmziz",
    "ahyxoqehbqkgeklysiic",
    "ebkogtccndlsiplxhzub",
    "jkzntgkvmluaacgskubt",
    "dhmougmgcyzwuqgpixlo",
    "gifcqdcbvbfirkltyrxm",
    "chlxqadbwwnklitcdoes",
    "xyywfnkkkbsxdudozuab",
    "asplxtfskzckpnmlirnn",
    "oyhvubfgcdquapowibxs",
    "iqxtfksezqnbfcdadbzn",
    "vlqynomnpkbunyootsei",
    "fscvjhkjybqxxbtfsgnf",
    "ipikhfghpdffdxkhwybi",
    "icemcamwidyernojrebt",
    "cqysujdzbdykbowqgcfe",
    "naeeoofhhpvlrpbraiyk",
    "ghwigxawdxnmjipyoomu",
    "ovoofyhtzqdmajovdsym",
    "zwlugdxblqyuwpivfeck",
    "ytdvrqxsnzbyyedcwqsb",
    "dshucoughdgakrvdfdpi",
    "gkssfzdzokzumuvzrtrq",
    "pultkoonprbyatyqtisp",
    "bnrgdwenddexwgpoeyey",
    "atczneqvxkoofemkcanu",
    "kgtgegwzdodcskgpqpjr",
    "ajufrmquhhvoqacrxgkm",
    "zabdlpzgtlgflmhbzcbk",
    "dasffsnodefdqwlejiyf",
    "zkpueemyqfflwebergff",
    "bmcctorjihpxbjxiqwdv",
    "kpwmbxgtqnaalwwfmvuf",
    "wbxyrqcefyufmwqnpzyd",
    "eunmwslghvidqtrsgyhf",
    "efqxgmfsnfmvyuosjtma",
    "qgwpfkrntpdsevjqyyqp",
    "kfgiilcvjrkjiuhlbhqc",
    "ivdzlusjssgjdzqunmbu",
    "xyzmhxczxabbsqsdwlly",
    "budmwucughtvhbmoajov",
    "dgxvdtuzvdgnxghlgwyj",
    "xldgvyffgaiiqvocewdd",
    "bbzonvrhdcbfpezemihe",
    "ajcdycgphnmsptbsitpz",
    "yzdllrfpsrpjqfzwrjnn",
    "aeznzowpqyattifkezlc",
    "bfellswqwcafizuwxbvv",
    "okkmxuqlraapuipvcvaf",
    "umbkpiegesyynivbauiu",
    "yxshnefxicqjzgfyiyjt",
    "uvwtoxhyflqhgycslrxc",
    "wfqwdvrywcbeciqhvskn",
    "dhrhqrfgqobjaqqlenfm",
    "mptofkjvxpnathanmogs",
    "chwbuwhmfylmxtnbirqo",
    "odsnvdqdfiyldhyswctv",
    "ocdeztwdtdujspojcyze",
    "hnfrohsvvhbraotsplxx",
    "xyqmpudnuneadeimarjo",
    "uarrzgbxmfxvodbxpkii",
    "avkoteimiprqsynaxaoe",
    "qfsyvpveuooaywhkatjz",
    "mnsyhyybbbdnzazpvwjp",
    "pjyilyimkhpxyhvobqfl",
    "ltyvhzghgguerzbjcwjw",
    "nituswmfjvjkqtufbena",
    "gcfvoiouaprizqxvhvfg",
    "jgsjjkwfqgqmezfvssbc",
    "woyfwsyqbzriyfllaenr",
    "uqlswcoohgcicuttfhbd",
    "cupbpqsywjalktlseiuv",
    "bzarwlusztrotkrbpvml",
    "ntwqqpmdlfkionicdpmx",
    "auikeuphlomkwsfhpote",
    "sgzhvdcahyibqoweguyl",
    "oedmngqcbgumempfvimc",
    "jbagakyewmigujcectko",
    "olamahwamjmgbmqgbuhw",
    "rdxclumbhhanmgunvvuj",
    "uljmekrlmrdfbavikqou",
    "pppmtekodyzbcddgzymd",
    "kvgawhgnsyqqjqaruzvb",
    "kttnnnbtdyktmtzmespp",
    "trnaqyuydbciwcbrdntt",
    "zvacgrztuzrqxmtnyppd",
    "xntmsvelydyxmalirhei",
    "bkklvymgtznopjcqvfgn",
    "dcqgogmffuznrulpzony",
    "pqdlnrmypdywukccimbj",
    "iwzllusvoesqdtmwykjn",
    "gupxnanjdjmukflmfskh",
    "ehmvquswmztdpxypjarn",
    "fxjdemdhxuwjyjswajoc",
    "rjjygfellcwwtcbipxgr",
    "vsnlsutwmdkwdwlzzaud",
    "sjiszplofrepzkmipujl",
    "gwjexwfhlabqytcjpuxx",
    "pboyzpjcskbmyiypgzub",
    "uzjuofjpoacwmtbeztrq",
    "icndsgzvdxibhnhwjngl",
    "olbnamsxmxifabxmbort",
    "unxanbimxgdxnfeilszy",
    "mxgzpxopptselqkmzthq",
    "rgekwsefzvmaqrembxjs",
    "qsfwcozbkvuxyvebwkzs",
    "bqrjvacqenguubstgfqv",
    "jdzpyrcszwutzwbuoihm",
    "fvcilptworieawgjzdph",
    "pzrydphmjxkbxwdftdun",
    "bmunjwqqzjsmgvkzeisg",
    "dprlwgfgdfousynacyga",
    "ujhycndxporsrvoepnri",
    "lazdeauwdmldxwkwjqie",
    "spgqecwyddvsrzjexrjc",
    "thpwkjapbjltqlezsvjd",
    "tzaxbiauucujnmnyhahi",
    "cxodqqwhueiqnmfordij",
    "qhcgenlucrqhuesohyum",
    "vslpawxdbwcgiohuzfqg",
    "uktogosynbbipvfxocib",
    "grvvpnizvsskflieagxa",
    "nnifqaxywewdlommiyqn",
    "wigvaudmgfjcrvtvzdez",
    "wzysxmgmqkqdbuenjqkc",
    "pcjtzslawrejvxcerttg",
    "xfyilgwlioshrrfefhhb",
    "qaqpekzymocugxgkuoni",
    "wakipfjxhifmmlwccoif",
    "wnyktmdjwxmscakxpbdo",
    "nojnjcjbphxppusbhzgw",
    "jaiokicciuelgqbihrvk",
    "lonfjsnssrfezalbbzsk",
    "toatlzdxibhmvkapqgha",
    "qkhrlakykqlvhisaicuy",
    "xnvckvnhrxtcjtgjfkuj",
    "zqacaotcjwrdmkngjsjx",
    "hgawqofziahytapubtjd",
    "afpwrudjymvdizhqmive",
    "iqiendfysscvlwilaxsp",
    "amtpmwarofqzvwvwnpop",
    "bpvzqrkgcztwtkndvmbc",
    "bkxnmappakzopywknmum",
    "qwyvrivaeyxlgzdusrqm",
    "vqqvvhurnmxzyxmplicf",
    "xtestadzrvznxudkfxjq",
    "yfhxhlbsovbfgnzyzdol",
    "xwffjqhfjqsdveworwxf",
    "zoyglozzlpewejnefcdv",
    "upkrzfrrmactuzxpmadu",
    "tuzknlkdfljptdyylilz",
    "qehxddnyceohxuanoxmq",
    "qtnirbwzqbkqekoqjlmh",
    "wecwlmwfdamazivvvkbr",
)
