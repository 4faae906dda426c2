'''
Random test (3 tests in total).
'''

__all__=['randomstream']

import numpy as np
from StiefelNorm.Misc import RandomStream,streams
from unittest import TestCase,TestLoader,TestSuite

class TestRandomStream(TestCase):
    def test_reproducible(self):
        self.assertTrue(np.array_equal(RandomStream(42,3).normal(100),RandomStream(42,3).normal(100)))
        self.assertFalse(np.array_equal(RandomStream(42,3).normal(100),RandomStream(42,4).normal(100)))

    def test_normal(self):
        values=RandomStream(7).normal((200,50))
        self.assertEqual(values.shape,(200,50))
        self.assertAlmostEqual(np.mean(values),0.0,delta=0.05)
        self.assertAlmostEqual(np.var(values),1.0,delta=0.07)

    def test_streams(self):
        self.assertEqual([stream.index for stream in streams(5,3)],[0,1,2])
        self.assertTrue(np.all((lambda u: (u>=0)&(u<1))(RandomStream(5).uniform(1000))))

randomstream=TestSuite([
                TestLoader().loadTestsFromTestCase(TestRandomStream),
                ])
