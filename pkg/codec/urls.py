from django.urls import path, include
from rest_framework.routers import DefaultRouter

from codec import views

# profiles/ and profiles/{pk}/ plus the encode and spectrum actions
router = DefaultRouter()
router.register('profiles', views.ProfileViewSet)

app_name = 'codec'

urlpatterns = [
    path('', include(router.urls)),
]
