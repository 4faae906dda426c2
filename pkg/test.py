if __name__=='__main__':
    import sys
    if 'clean' in sys.argv:
        import platform,os
        if platform.system()=='Windows':
            os.system("powershell.exe rm -r *.json")
            os.system("powershell.exe rm -r *.log")
        else:
            os.system("rm -rf *.json")
            os.system("rm -rf *.log")
    else:
        from StiefelNorm.Test.test_Basics import *
        from StiefelNorm.Test.test_Misc import *
        from StiefelNorm.Test.test_Zonal import *
        from StiefelNorm.Test.test_Series import *
        from StiefelNorm.Test.test_Bounds import *
        from StiefelNorm.Test.test_Verify import *
        from StiefelNorm.Test.test_MonteCarlo import *
        from StiefelNorm.Test.test_NormConst import *
        from StiefelNorm.Test.test_Management import *
        from unittest import TestSuite,main
        all=TestSuite()
        all.addTest(basics)
        all.addTest(misc)
        all.addTest(zonalall)
        all.addTest(seriesall)
        all.addTest(boundsall)
        all.addTest(verifyall)
        all.addTest(montecarlo)
        all.addTest(normconstall)
        all.addTest(managementall)
        main(defaultTest='all',argv=sys.argv[:1],verbosity=2)
